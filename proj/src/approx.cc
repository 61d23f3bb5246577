// Copyright 2026 The Combcontract Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "combcontract/approx.h"

#include <string>

#include "combcontract/error.h"

namespace combcontract {
namespace {

BitPrecision RequireK(const Instance& inst, const char* what) {
  if (!inst.k.has_value()) {
    Fail(ErrorKind::kPrecondition,
         std::string(what) + " needs an instance with declared bit precision k");
  }
  return *inst.k;
}

// Simplest rational in the interval; hi == nullopt means +infinity (open).
Rational Simplest(const Rational& lo, bool lo_open,
                  const std::optional<Rational>& hi, bool hi_open) {
  const BigInt floor = lo.Floor();
  if (lo.IsInteger() && !lo_open) return lo;
  const Rational next_int(BigInt(floor + 1));
  if (!hi || next_int < *hi || (next_int == *hi && !hi_open)) return next_int;

  // floor <= lo < hi <= floor + 1 with no integer admissible: recurse on the
  // reciprocals of the fractional parts, swapping the ends.
  const Rational base{floor};
  const Rational frac_lo = lo - base;
  const Rational frac_hi = *hi - base;
  std::optional<Rational> inv_hi;
  if (!frac_lo.IsZero()) inv_hi = frac_lo.Inverse();
  return base + Simplest(frac_hi.Inverse(), hi_open, inv_hi, lo_open).Inverse();
}

}  // namespace

GridSpec GridSpec::Make(const Rational& epsilon, BitPrecision k) {
  if (epsilon.Sign() <= 0 || epsilon >= 1) {
    Fail(ErrorKind::kDomain,
         "epsilon must lie in (0, 1), got " + epsilon.ToString());
  }
  const Rational ratio = Rational(1) - epsilon;
  const Rational target = Rational::PowerOfHalf(k.bits());
  std::vector<Rational> points;
  Rational power = 1;
  while (power > target) {
    power *= ratio;
    points.push_back(Rational(1) - power);
  }
  return GridSpec(epsilon, k, std::move(points));
}

ContractSolution Fptas(const Instance& inst, const Rational& epsilon,
                       ValueOracle& oracle) {
  const GridSpec grid = GridSpec::Make(epsilon, RequireK(inst, "fptas"));
  const int64_t start = oracle.queries();
  ContractSolution best;
  best.alpha = 0;
  best.value = 0;
  best.utility = 0;
  for (const Rational& alpha : grid.points()) {
    const Rational value = oracle(alpha);
    const Rational utility = PrincipalUtility(alpha, value);
    if (utility > best.utility) {
      best.alpha = alpha;
      best.value = value;
      best.utility = utility;
    }
  }
  best.queries = oracle.queries() - start;
  best.incentivized = IncentivizedSet(inst, best.alpha, oracle.limit());
  return best;
}

ContractSolution Fptas(const Instance& inst, const Rational& epsilon) {
  ValueOracle oracle(inst);
  return Fptas(inst, epsilon, oracle);
}

Rational SimplestRationalIn(const Rational& lo, bool lo_open,
                            const Rational& hi, bool hi_open) {
  if (lo.Sign() < 0) {
    Fail(ErrorKind::kPrecondition, "interval must lie in [0, infinity)");
  }
  if (hi < lo || (hi == lo && (lo_open || hi_open))) {
    Fail(ErrorKind::kPrecondition, "empty interval from " + lo.ToString() +
                                       " to " + hi.ToString());
  }
  return Simplest(lo, lo_open, hi, hi_open);
}

Rational UniqueRationalIn(const Rational& lo, const Rational& hi,
                          BitPrecision k) {
  if (lo >= hi) {
    Fail(ErrorKind::kPrecondition, "need lo < hi, got (" + lo.ToString() +
                                       ", " + hi.ToString() + "]");
  }
  if (hi - lo > Rational::PowerOfHalf(2 * k.bits())) {
    Fail(ErrorKind::kPrecondition,
         "interval (" + lo.ToString() + ", " + hi.ToString() +
             "] is wider than 2^-" + std::to_string(2 * k.bits()));
  }
  const Rational r = SimplestRationalIn(lo, /*lo_open=*/true, hi,
                                        /*hi_open=*/false);
  // The simplest fraction minimizes numerator and denominator at once, so
  // it is bounded iff any fraction in the interval is.
  if (r.Sign() <= 0 || r.numerator() > k.Scale() ||
      r.denominator() > k.Scale()) {
    Fail(ErrorKind::kNotFound, "no a/b with a, b <= 2^" +
                                   std::to_string(k.bits()) + " in (" +
                                   lo.ToString() + ", " + hi.ToString() + "]");
  }
  return r;
}

std::optional<Rational> SuccessorSearch(
    const Instance& inst, const Rational& alpha, ValueOracle& oracle,
    const std::optional<Rational>& value_at_alpha,
    std::vector<SearchState>* trace) {
  const BitPrecision k = RequireK(inst, "binary-search successor");
  if (alpha.Sign() < 0 || alpha > 1) {
    Fail(ErrorKind::kDomain,
         "contract alpha must lie in [0, 1], got " + alpha.ToString());
  }
  if (alpha == 1) return std::nullopt;

  const int64_t start = oracle.queries();
  Rational lo = alpha;
  Rational v_lo;
  if (value_at_alpha) {
    v_lo = *value_at_alpha;
  } else if (!alpha.IsZero()) {
    v_lo = oracle(alpha);
  }
  Rational hi = 1;
  Rational v_hi = oracle(hi);
  if (v_hi == v_lo) return std::nullopt;

  const Rational width = Rational::PowerOfHalf(2 * k.bits());
  auto record = [&] {
    if (trace) trace->push_back({lo, hi, oracle.queries() - start});
  };
  record();
  while (hi - lo > width) {
    if (!(v_hi > v_lo)) {
      Fail(ErrorKind::kInvariantViolation,
           "bisection lost V(hi) > V(lo) on (" + lo.ToString() + ", " +
               hi.ToString() + "]");
    }
    const Rational mid = (lo + hi) / 2;
    Rational v_mid = oracle(mid);
    if (v_mid > v_lo) {
      hi = mid;
      v_hi = std::move(v_mid);
    } else {
      lo = mid;
      v_lo = std::move(v_mid);
    }
    record();
  }
  return UniqueRationalIn(lo, hi, k);
}

}  // namespace combcontract
