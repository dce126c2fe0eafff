#include "erlab/optimisation.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "erlab/errors.hpp"

namespace erlab {

BigCount opt_value(long r) {
  if (r < 0) throw DomainError("OPT(r) needs r >= 0");
  if (r <= 1) return 1;
  const BigCount three = 3;
  switch (r % 3) {
    case 0: return power(three, static_cast<unsigned long>(r / 3));
    case 1: return 4 * power(three, static_cast<unsigned long>((r - 4) / 3));
    default: return 2 * power(three, static_cast<unsigned long>((r - 2) / 3));
  }
}

BigCount objective(const Composition& m) {
  BigCount p = 1;
  for (auto x : m) p *= x;
  return p;
}

std::vector<Composition> partitions(unsigned r) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(r, r);
  return out;
}

std::vector<Composition> opt_structure(long r) {
  if (r < 0) throw DomainError("r must be nonnegative");
  if (r <= 1) return {Composition(static_cast<std::size_t>(r), 1u)};
  const auto threes = [](long count) { return Composition(static_cast<std::size_t>(count), 3u); };
  switch (r % 3) {
    case 0: return {threes(r / 3)};
    case 2: {
      Composition m = threes(r / 3);
      m.push_back(2);
      return {m};
    }
    default: {
      Composition four = threes((r - 4) / 3);
      four.insert(four.begin(), 4);
      Composition twos = threes((r - 4) / 3);
      twos.push_back(2);
      twos.push_back(2);
      return {four, twos};
    }
  }
}

namespace {
void check_small(long r) {
  if (r < 0) throw DomainError("r must be nonnegative");
  if (r > 40) throw CapacityError("exhaustive MAX(r) is limited to r <= 40");
}
}  // namespace

OptResult opt_bruteforce(long r) {
  check_small(r);
  OptResult res;
  res.value = 0;
  for (auto& m : partitions(static_cast<unsigned>(r))) {
    const BigCount obj = objective(m);
    if (obj > res.value) {
      res.value = obj;
      res.argmax.clear();
    }
    if (obj == res.value) res.argmax.push_back(std::move(m));
  }
  return res;
}

bool verify_opt_gap(long r) {
  check_small(r);
  const OptResult best = opt_bruteforce(r);
  for (const auto& m : partitions(static_cast<unsigned>(r))) {
    const BigCount obj = objective(m);
    if (obj != best.value && 9 * obj > 8 * best.value) return false;
  }
  return true;
}

bool verify_opt_monotone(long r) {
  if (r < 3) throw DomainError("the monotonicity check needs r >= 3");
  return 4 * opt_value(r - 1) <= 3 * opt_value(r);
}

int vsopt_compare(unsigned s, const Composition& m) {
  unsigned long exponent = 0;
  BigCount prod = 1;
  for (auto x : m) {
    exponent += x - 1;
    prod *= x;
  }
  const BigCount three = 3;
  const BigCount lhs = s * power(three, exponent);
  const BigCount rhs = power(three, s - 1) * prod;
  return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

VsOptResult vsopt_check(unsigned s) {
  if (s < 2 || s > 9) throw DomainError("vsopt_check needs 2 <= s <= 9");
  const unsigned target = s * (s - 1) / 2;
  VsOptResult res;
  Composition cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      res.feasible.push_back(cur);
      return;
    }
    for (unsigned m = max_part; m >= 2; --m) {
      const unsigned w = m * (m - 1) / 2;
      if (w > remaining) continue;
      cur.push_back(m);
      rec(remaining - w, m);
      cur.pop_back();
    }
  };
  rec(target, s);
  for (const auto& m : res.feasible) {
    const int c = vsopt_compare(s, m);
    if (c < 0) res.holds = false;
    if (c == 0) res.equality_cases.push_back(m);
  }
  return res;
}

bool g_decreasing_at(unsigned x) {
  if (x < 2) throw DomainError("g is examined for x >= 2");
  const unsigned long a = static_cast<unsigned long>(x) * (x - 1) / 2;
  const unsigned long b = static_cast<unsigned long>(x + 1) * x / 2;
  return power(BigCount(3 * (x + 1)), a) > power(BigCount(x), b);
}

}  // namespace erlab
