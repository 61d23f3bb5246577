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

#include "combcontract/demand.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "combcontract/error.h"

namespace combcontract {
namespace {

void CheckAlpha(const Rational& alpha) {
  if (alpha.Sign() < 0 || alpha > 1) {
    Fail(ErrorKind::kDomain,
         "contract alpha must lie in [0, 1], got " + alpha.ToString());
  }
}

void SortCanonical(std::vector<ActionSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess);
}

}  // namespace

int BruteForceLimitFromEnv() {
  const char* raw = std::getenv("COMBCONTRACT_BRUTE_FORCE_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultBruteForceLimit;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0) {
    Fail(ErrorKind::kParse,
         "COMBCONTRACT_BRUTE_FORCE_LIMIT must be a positive integer");
  }
  return static_cast<int>(std::min<long>(value, kMaxActions));
}

OrderedDemand GreedyDemand(const Instance& inst, const Rational& alpha) {
  if (!inst.f.GsCertified()) {
    Fail(ErrorKind::kUnsupportedClass,
         std::string("greedy demand needs a gross-substitutes class, got ") +
             std::string(FunctionClassName(inst.f.cls())));
  }
  CheckAlpha(alpha);

  OrderedDemand out;
  const int n = inst.n();
  Rational current = inst.f.Value(out.set);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    Rational best_utility;
    for (int a = 0; a < n; ++a) {
      if (out.set.Contains(a)) continue;
      const Rational utility =
          alpha * (inst.f.Value(out.set.With(a)) - current) - inst.costs[a];
      // Larger utility wins; then larger cost; index order gives the
      // smallest index on a full tie.
      if (best < 0 || utility > best_utility ||
          (utility == best_utility && inst.costs[a] > inst.costs[best])) {
        best = a;
        best_utility = utility;
      }
    }
    if (best < 0 || best_utility.Sign() < 0) break;
    out.order.push_back(best);
    out.set = out.set.With(best);
    out.step_utilities.push_back(best_utility);
    current = inst.f.Value(out.set);
  }
  return out;
}

SubsetTable::SubsetTable(const Instance& inst, int limit) : n_(inst.n()) {
  if (n_ > limit) {
    Fail(ErrorKind::kResource, "brute force over " + std::to_string(n_) +
                                   " actions exceeds the limit of " +
                                   std::to_string(limit));
  }
  f_ = inst.f.ToTable().values;
  c_.resize(f_.size());
  for (uint32_t mask = 1; mask < f_.size(); ++mask) {
    const int low = std::countr_zero(mask);
    c_[mask] = c_[mask & (mask - 1)] + inst.costs[low];
  }

  denom_ = 1;
  for (size_t i = 0; i < f_.size(); ++i) {
    mpz_lcm(denom_.get_mpz_t(), denom_.get_mpz_t(),
            f_[i].raw().get_den_mpz_t());
    mpz_lcm(denom_.get_mpz_t(), denom_.get_mpz_t(),
            c_[i].raw().get_den_mpz_t());
  }
  f_scaled_.reserve(f_.size());
  c_scaled_.reserve(c_.size());
  for (size_t i = 0; i < f_.size(); ++i) {
    f_scaled_.push_back(f_[i].numerator() * (denom_ / f_[i].denominator()));
    c_scaled_.push_back(c_[i].numerator() * (denom_ / c_[i].denominator()));
  }
}

BigInt SubsetTable::ScaledUtility(uint32_t mask, const BigInt& p,
                                  const BigInt& q) const {
  return p * f_scaled_[mask] - q * c_scaled_[mask];
}

DemandProfile SubsetTable::Demand(const Rational& alpha) const {
  CheckAlpha(alpha);
  const BigInt p = alpha.numerator();
  const BigInt q = alpha.denominator();

  DemandProfile profile;
  profile.alpha = alpha;
  BigInt best;
  std::vector<uint32_t> maximizers;
  for (uint32_t mask = 0; mask < size(); ++mask) {
    BigInt u = ScaledUtility(mask, p, q);
    if (maximizers.empty() || u > best) {
      best = std::move(u);
      maximizers.assign(1, mask);
    } else if (u == best) {
      maximizers.push_back(mask);
    }
  }
  const BigInt* top_f = nullptr;
  for (uint32_t mask : maximizers) {
    profile.demand.emplace_back(mask);
    if (top_f == nullptr || f_scaled_[mask] > *top_f) top_f = &f_scaled_[mask];
  }
  for (uint32_t mask : maximizers) {
    if (f_scaled_[mask] == *top_f) profile.demand_star.emplace_back(mask);
  }
  SortCanonical(profile.demand);
  SortCanonical(profile.demand_star);
  profile.agent_utility = Rational::Reduce(best, q * denom_);
  profile.value = f_[profile.demand_star.front().mask()];
  return profile;
}

uint32_t SubsetTable::PrincipalFavoured(const Rational& alpha) const {
  return CanonicalBestResponse(Demand(alpha)).mask();
}

std::optional<Rational> SubsetTable::NextBreakpoint(const Rational& alpha,
                                                    uint32_t* entering) const {
  const uint32_t current = PrincipalFavoured(alpha);
  const BigInt& f0 = f_scaled_[current];
  const BigInt& c0 = c_scaled_[current];

  // Every set with a larger f lies strictly below `current` at alpha and
  // overtakes it at (c - c0) / (f - f0); the earliest crossing is the next
  // jump of V, and the f-maximal set crossing there is D* at the jump.
  bool found = false;
  BigInt best_num;
  BigInt best_den;
  uint32_t best_mask = 0;
  for (uint32_t mask = 0; mask < size(); ++mask) {
    if (f_scaled_[mask] <= f0) continue;
    BigInt num = c_scaled_[mask] - c0;
    BigInt den = f_scaled_[mask] - f0;
    bool take = !found;
    if (found) {
      const int order = cmp(num * best_den, best_num * den);
      take = order < 0 ||
             (order == 0 && f_scaled_[mask] > f_scaled_[best_mask]);
    }
    if (take) {
      found = true;
      best_num = std::move(num);
      best_den = std::move(den);
      best_mask = mask;
    }
  }
  if (!found) return std::nullopt;
  const Rational beta = Rational::Reduce(best_num, best_den);
  if (beta <= alpha) {
    Fail(ErrorKind::kInvariantViolation,
         "envelope crossing " + beta.ToString() + " not above " +
             alpha.ToString());
  }
  if (beta > 1) return std::nullopt;
  if (entering != nullptr) *entering = best_mask;
  return beta;
}

DemandProfile BruteForceDemand(const Instance& inst, const Rational& alpha,
                               int limit) {
  return SubsetTable(inst, limit).Demand(alpha);
}

ActionSet CanonicalBestResponse(const DemandProfile& profile) {
  if (profile.demand_star.empty()) return ActionSet();
  return *std::min_element(profile.demand_star.begin(),
                           profile.demand_star.end(), CanonicalLess);
}

ValueOracle::ValueOracle(const Instance& inst, int brute_force_limit)
    : inst_(inst), limit_(brute_force_limit) {}

ValueOracle::~ValueOracle() = default;

Rational ValueOracle::operator()(const Rational& alpha) {
  ++queries_;
  if (inst_.f.GsCertified()) {
    return inst_.f.Value(GreedyDemand(inst_, alpha).set);
  }
  if (!table_) table_ = std::make_unique<SubsetTable>(inst_, limit_);
  return table_->Demand(alpha).value;
}

ActionSet IncentivizedSet(const Instance& inst, const Rational& alpha,
                          int brute_force_limit) {
  if (inst.f.GsCertified()) return GreedyDemand(inst, alpha).set;
  return CanonicalBestResponse(BruteForceDemand(inst, alpha, brute_force_limit));
}

}  // namespace combcontract
