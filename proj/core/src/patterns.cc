// Copyright 2026 The Capset Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "capset/patterns.h"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "capset/errors.h"
#include "internal/combinations.h"
#include "internal/pattern_masks.h"

namespace capset {

using internal::MaskRef;
using internal::PairMasks;
using internal::PatternMasks;

Verdict IsAdmissible(const VectorSet& s) {
  const auto elems = s.elements();
  const std::size_t n = elems.size();
  if (n <= 1) return Verdict::Pass();
  const PatternMasks masks(elems, s.dimension());
  auto ref = [&](std::size_t i) { return MaskRef{&masks, i}; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!internal::PairOk(ref(i), ref(j))) {
        return Verdict::Fail(
            Violation::kAdmissiblePair, {elems[i], elems[j]},
            "no coordinate pair with s_i = 0 != s'_i and s_j != 0 = s'_j");
      }
    }
  }
  PairMasks pair(masks.words());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pair.Load(ref(i), ref(j));
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!pair.TripleOkWith(ref(k))) {
          return Verdict::Fail(
              Violation::kAdmissibleTriple, {elems[i], elems[j], elems[k]},
              "no coordinate with values {0,1,2}, {0,0,1} or {0,0,2}");
        }
      }
    }
  }
  return Verdict::Pass();
}

Verdict IsRecursivelyAdmissible(const VectorSet& s) {
  if (s.size() < 2) {
    return Verdict::Fail(Violation::kTooSmall, {},
                         "recursively admissible sets need >= 2 elements");
  }
  if (Verdict v = IsAdmissible(s); !v) return v;
  const auto elems = s.elements();
  const PatternMasks masks(elems, s.dimension());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      bool zero_one = false, zero_two = false, common_zero = false;
      for (int w = 0; w < masks.words(); ++w) {
        const auto zi = masks.zero(i)[w], zj = masks.zero(j)[w];
        zero_one |= ((zi & masks.one(j)[w]) | (masks.one(i)[w] & zj)) != 0;
        zero_two |= ((zi & masks.two(j)[w]) | (masks.two(i)[w] & zj)) != 0;
        common_zero |= (zi & zj) != 0;
      }
      if (!(zero_one && zero_two) && !common_zero) {
        return Verdict::Fail(
            Violation::kRecursivePair, {elems[i], elems[j]},
            "no {0,1} and {0,2} coordinates and no common zero");
      }
    }
  }
  return Verdict::Pass();
}

Verdict IsConstantWeight(const VectorSet& s, int m, int w) {
  if (m < 0 || w < 0 || w > m) {
    throw DomainError("constant weight needs 0 <= w <= m, got m=" +
                      std::to_string(m) + " w=" + std::to_string(w));
  }
  if (!s.empty() && s.dimension() != m) {
    return Verdict::Fail(Violation::kWrongSize, {},
                         "vectors have length " +
                             std::to_string(s.dimension()) + ", expected " +
                             std::to_string(m));
  }
  for (const TernaryVector& v : s) {
    if (v.Weight() != w) {
      return Verdict::Fail(Violation::kWrongWeight, {v},
                           "weight " + std::to_string(v.Weight()) +
                               ", expected " + std::to_string(w));
    }
  }
  const BigCount expected = Binomial(m, w);
  if (BigCount(s.size()) != expected) {
    return Verdict::Fail(Violation::kWrongSize, {},
                         "set has " + std::to_string(s.size()) +
                             " elements, expected C(" + std::to_string(m) +
                             "," + std::to_string(w) + ") = " +
                             expected.str());
  }
  std::vector<std::pair<std::vector<int>, const TernaryVector*>> supports;
  supports.reserve(s.size());
  for (const TernaryVector& v : s) supports.emplace_back(v.Support(), &v);
  std::sort(supports.begin(), supports.end());
  for (std::size_t i = 1; i < supports.size(); ++i) {
    if (supports[i].first == supports[i - 1].first) {
      return Verdict::Fail(Violation::kRepeatedSupport,
                           {*supports[i - 1].second, *supports[i].second});
    }
  }
  return IsAdmissible(s);
}

std::optional<int> UniformWeight(const VectorSet& s) {
  if (s.empty()) return std::nullopt;
  const int w = s[0].Weight();
  for (const TernaryVector& v : s) {
    if (v.Weight() != w) return std::nullopt;
  }
  return w;
}

PatternSet PatternSet::Certify(VectorSet elements, bool recursive,
                               std::optional<int> constant_weight) {
  PatternSet p;
  Verdict v = IsAdmissible(elements);
  if (!v) throw CertificationError("not admissible: " + v.Describe());
  p.roles_ |= static_cast<std::uint8_t>(PatternRole::kAdmissible);
  if (recursive) {
    v = IsRecursivelyAdmissible(elements);
    if (!v) {
      throw CertificationError("not recursively admissible: " + v.Describe());
    }
    p.roles_ |= static_cast<std::uint8_t>(PatternRole::kRecursivelyAdmissible);
  }
  if (constant_weight) {
    v = IsConstantWeight(elements, elements.dimension(), *constant_weight);
    if (!v) throw CertificationError("not I(m,w): " + v.Describe());
    p.roles_ |= static_cast<std::uint8_t>(PatternRole::kConstantWeight);
    p.weight_ = constant_weight;
  }
  p.elements_ = std::move(elements);
  p.provenance_ = Provenance::kBruteForce;
  p.justification_ = "verified";
  return p;
}

PatternSet PatternSet::AdmissibleByLemma(VectorSet elements,
                                         std::string justification) {
  PatternSet p;
  p.elements_ = std::move(elements);
  p.roles_ = static_cast<std::uint8_t>(PatternRole::kAdmissible);
  p.provenance_ = Provenance::kByLemma;
  p.justification_ = std::move(justification);
  return p;
}

PatternSet BuildChain(int m) {
  if (m < 2) throw DomainError("chain needs m >= 2, got " + std::to_string(m));
  std::vector<TernaryVector> out;
  out.reserve(m);
  for (int k = 0; k < m; ++k) {
    TernaryVector v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v.Set(i, i < k ? 1 : (i == k ? 0 : 2));
    out.push_back(std::move(v));
  }
  return PatternSet::Certify(VectorSet(m, std::move(out)), /*recursive=*/true,
                             m - 1);
}

namespace {

// Places the vector on `support` with digit (1 + bit b of `coloring`) at its
// b-th coordinate.
TernaryVector Colored(int m, const std::vector<int>& support,
                      unsigned coloring) {
  TernaryVector v(static_cast<std::size_t>(m));
  for (std::size_t b = 0; b < support.size(); ++b) {
    v.Set(support[b], 1 + static_cast<int>((coloring >> b) & 1u));
  }
  return v;
}

}  // namespace

PatternSet BuildLowWeight(int m, int w) {
  if (w != 2 && w != 3) throw DomainError("low weight builder needs w in {2,3}");
  if (m <= w) throw DomainError("low weight builder needs m > w");
  const std::vector<std::vector<int>> supports = internal::Combinations(m, w);
  const std::size_t n = supports.size();
  const unsigned colorings = 1u << w;

  // All candidate vectors, indexed [support * colorings + coloring].
  std::vector<TernaryVector> candidates;
  candidates.reserve(n * colorings);
  for (const auto& support : supports) {
    for (unsigned c = 0; c < colorings; ++c) {
      candidates.push_back(Colored(m, support, c));
    }
  }
  const PatternMasks masks(candidates, m);
  auto ref = [&](std::size_t i) { return MaskRef{&masks, i}; };

  // Supports share one weight, so the pair condition holds automatically;
  // only triples need checking.
  std::vector<std::size_t> chosen(n);
  PairMasks pair(masks.words());
  std::function<bool(std::size_t)> place = [&](std::size_t t) -> bool {
    if (t == n) return true;
    for (unsigned c = 0; c < colorings; ++c) {
      const std::size_t cand = t * colorings + c;
      bool ok = true;
      for (std::size_t a = 0; a < t && ok; ++a) {
        pair.Load(ref(chosen[a]), ref(cand));
        for (std::size_t b = a + 1; b < t; ++b) {
          if (!pair.TripleOkWith(ref(chosen[b]))) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      chosen[t] = cand;
      if (place(t + 1)) return true;
    }
    return false;
  };
  if (!place(0)) {
    throw NotFoundError("no I(" + std::to_string(m) + "," + std::to_string(w) +
                        ") found by exhaustive backtracking");
  }
  std::vector<TernaryVector> out;
  out.reserve(n);
  for (const std::size_t c : chosen) out.push_back(candidates[c]);
  return PatternSet::Certify(VectorSet(m, std::move(out)), false, w);
}

PatternSet ProductAdmissible(const VectorSet& s, const VectorSet& t,
                             const ElementBudget& budget) {
  for (const VectorSet* x : {&s, &t}) {
    if (Verdict v = IsAdmissible(*x); !v) {
      throw CertificationError("product factor is not admissible: " +
                               v.Describe());
    }
  }
  VectorSet product = DirectProduct(s, t, budget);
  if (product.size() <= kReverifyLimit) {
    return PatternSet::Certify(std::move(product));
  }
  return PatternSet::AdmissibleByLemma(
      std::move(product), "direct product of admissible sets");
}

VectorSet SwapColors(const VectorSet& s) {
  std::vector<TernaryVector> out;
  out.reserve(s.size());
  for (const TernaryVector& v : s) out.push_back(SwapColors(v));
  return VectorSet(s.dimension(), std::move(out));
}

Verdict IsMetaExtendable(const VectorSet& s0, const VectorSet& s1,
                         const VectorSet& s2) {
  if (s0.dimension() != s1.dimension() || s0.dimension() != s2.dimension()) {
    throw DimensionError("meta triple with lengths " +
                         std::to_string(s0.dimension()) + ", " +
                         std::to_string(s1.dimension()) + ", " +
                         std::to_string(s2.dimension()));
  }
  const VectorSet* sets[3] = {&s0, &s1, &s2};
  for (int k = 0; k < 3; ++k) {
    Verdict v = IsAdmissible(*sets[k]);
    if (!v) {
      return Verdict::Fail(Violation::kNotAdmissible, std::move(v.witness),
                           "S" + std::to_string(k) + ": " + v.Describe());
    }
  }
  const VectorSet upper = Union(s1, s2);
  if (!s0.empty() && !upper.empty()) {
    auto heaviest = std::max_element(
        s0.begin(), s0.end(), [](const auto& a, const auto& b) {
          return a.Weight() < b.Weight();
        });
    auto lightest = std::min_element(
        upper.begin(), upper.end(), [](const auto& a, const auto& b) {
          return a.Weight() < b.Weight();
        });
    if (heaviest->Weight() >= lightest->Weight()) {
      return Verdict::Fail(Violation::kMetaWeight, {*heaviest, *lightest},
                           "weight " + std::to_string(heaviest->Weight()) +
                               " in S0 is not below weight " +
                               std::to_string(lightest->Weight()));
    }
  }
  const int m = s0.dimension();
  const PatternMasks m0(s0.elements(), m);
  const PatternMasks mu(upper.elements(), m);
  const PatternMasks m1(s1.elements(), m);
  const PatternMasks m2(s2.elements(), m);
  PairMasks pair(m0.words());
  for (std::size_t i = 0; i < s0.size(); ++i) {
    for (std::size_t j = i; j < s0.size(); ++j) {
      pair.Load({&m0, i}, {&m0, j});
      for (std::size_t k = 0; k < upper.size(); ++k) {
        if (!pair.TripleOkWith({&mu, k})) {
          return Verdict::Fail(Violation::kMetaCondition2,
                               {s0[i], s0[j], upper[k]});
        }
      }
    }
  }
  for (std::size_t i = 0; i < s0.size(); ++i) {
    for (std::size_t j = 0; j < s1.size(); ++j) {
      pair.Load({&m0, i}, {&m1, j});
      for (std::size_t k = 0; k < s2.size(); ++k) {
        if (!pair.TripleOkWith({&m2, k})) {
          return Verdict::Fail(Violation::kMetaCondition3,
                               {s0[i], s1[j], s2[k]});
        }
      }
    }
  }
  return Verdict::Pass();
}

MetaTriple MetaTriple::Certify(VectorSet s0, VectorSet s1, VectorSet s2) {
  const Verdict v = IsMetaExtendable(s0, s1, s2);
  if (!v) throw CertificationError("not meta-extendable: " + v.Describe());
  return MetaTriple({std::move(s0), std::move(s1), std::move(s2)});
}

MetaShape ShapeOf(const MetaTriple& triple) {
  MetaShape shape;
  shape.length = triple.length();
  for (int i = 0; i < 3; ++i) {
    shape.sizes[i] = triple.set(i).size();
    shape.weights[i] = UniformWeight(triple.set(i));
  }
  return shape;
}

MetaExtension MetaExtendCount(const VectorSet& t, const MetaShape& shape) {
  MetaExtension out;
  out.length = t.dimension() * shape.length;
  out.size = 0;
  std::optional<int> weight;
  bool uniform = true;
  for (const TernaryVector& v : t) {
    BigCount term = 1;
    int w = 0;
    for (const auto d : v.digits()) {
      term *= shape.sizes[d];
      if (shape.weights[d]) {
        w += *shape.weights[d];
      } else if (shape.sizes[d] != 0) {
        uniform = false;
      }
    }
    out.size += term;
    if (term == 0) continue;
    if (weight && *weight != w) uniform = false;
    weight = w;
  }
  if (uniform) out.weight = weight;
  return out;
}

MetaExtension MetaExtend(const VectorSet& t, const MetaTriple& triple,
                         const ElementBudget& budget) {
  if (Verdict v = IsAdmissible(t); !v) {
    throw CertificationError("T is not meta-admissible: " + v.Describe());
  }
  MetaExtension out = MetaExtendCount(t, ShapeOf(triple));
  if (!WithinBudget(out.size, budget)) return out;

  std::vector<TernaryVector> all;
  all.reserve(static_cast<std::size_t>(out.size));
  for (const TernaryVector& v : t) {
    VectorSet block = triple.set(v[0]);
    for (std::size_t i = 1; i < v.size(); ++i) {
      block = DirectProduct(block, triple.set(v[i]), budget);
    }
    all.insert(all.end(), block.begin(), block.end());
  }
  VectorSet result(out.length, std::move(all));
  if (result.size() <= kReverifyLimit) {
    out.elements = PatternSet::Certify(std::move(result));
  } else {
    out.elements = PatternSet::AdmissibleByLemma(
        std::move(result), "meta extension of a meta-extendable triple");
  }
  return out;
}

PatternSet SearchMetaS0(const VectorSet& s1, const VectorSet& s2, int w0,
                        int target) {
  if (s1.dimension() != s2.dimension()) {
    throw DimensionError("S1 and S2 have different lengths");
  }
  const int m = s1.dimension();
  if (w0 < 0 || w0 > m) throw DomainError("w0 out of range");
  for (const VectorSet* s : {&s1, &s2}) {
    if (Verdict v = IsAdmissible(*s); !v) {
      throw DomainError("S1/S2 must be admissible: " + v.Describe());
    }
    for (const TernaryVector& v : *s) {
      if (v.Weight() <= w0) {
        throw DomainError("element " + v.ToString() +
                          " of S1/S2 has weight <= w0");
      }
    }
  }
  const VectorSet upper = Union(s1, s2);

  // Candidate pool: every weight-w0 vector, grouped by lexicographic support.
  std::vector<TernaryVector> pool;
  std::vector<int> support_id;
  {
    const auto supports = internal::Combinations(m, w0);
    for (std::size_t s = 0; s < supports.size(); ++s) {
      for (unsigned c = 0; c < (1u << w0); ++c) {
        // Enumerate colorings so that digits increase lexicographically.
        unsigned reversed = 0;
        for (int b = 0; b < w0; ++b) reversed |= ((c >> b) & 1u) << (w0 - 1 - b);
        pool.push_back(Colored(m, supports[s], reversed));
        support_id.push_back(static_cast<int>(s));
      }
    }
  }
  const PatternMasks mp(pool, m);
  const PatternMasks mu(upper.elements(), m);
  const PatternMasks m1(s1.elements(), m);
  const PatternMasks m2(s2.elements(), m);
  PairMasks pair(mp.words());

  // Conditions (2) with x = y and (3) for a lone candidate.
  std::vector<std::size_t> viable;
  for (std::size_t c = 0; c < pool.size(); ++c) {
    bool ok = true;
    pair.Load({&mp, c}, {&mp, c});
    for (std::size_t k = 0; k < upper.size() && ok; ++k) {
      ok = pair.TripleOkWith({&mu, k});
    }
    for (std::size_t j = 0; j < s1.size() && ok; ++j) {
      pair.Load({&mp, c}, {&m1, j});
      for (std::size_t k = 0; k < s2.size() && ok; ++k) {
        ok = pair.TripleOkWith({&m2, k});
      }
    }
    if (ok) viable.push_back(c);
  }

  // Pairwise compatibility: admissible pair condition and condition (2).
  const std::size_t nv = viable.size();
  std::vector<std::vector<bool>> compat(nv, std::vector<bool>(nv, false));
  for (std::size_t a = 0; a < nv; ++a) {
    for (std::size_t b = a + 1; b < nv; ++b) {
      const MaskRef x{&mp, viable[a]}, y{&mp, viable[b]};
      bool ok = internal::PairOk(x, y);
      if (ok) {
        pair.Load(x, y);
        for (std::size_t k = 0; k < upper.size() && ok; ++k) {
          ok = pair.TripleOkWith({&mu, k});
        }
      }
      compat[a][b] = compat[b][a] = ok;
    }
  }

  const bool maximize = target <= 0;
  std::vector<std::size_t> chosen, best;
  auto distinct_supports = [&](const std::vector<std::size_t>& domain) {
    int count = 0, last = -1;
    for (const std::size_t d : domain) {
      if (support_id[viable[d]] != last) {
        ++count;
        last = support_id[viable[d]];
      }
    }
    return count;
  };
  std::function<bool(const std::vector<std::size_t>&)> extend =
      [&](const std::vector<std::size_t>& domain) -> bool {
    if (chosen.size() > best.size()) best = chosen;
    if (!maximize && static_cast<int>(chosen.size()) >= target) return true;
    const std::size_t goal = maximize ? best.size() + 1
                                      : static_cast<std::size_t>(target);
    if (chosen.size() + distinct_supports(domain) < goal) return false;
    for (std::size_t idx = 0; idx < domain.size(); ++idx) {
      const std::size_t c = domain[idx];
      // Admissible triple condition with every chosen pair.
      bool ok = true;
      for (std::size_t a = 0; a < chosen.size() && ok; ++a) {
        pair.Load({&mp, viable[chosen[a]]}, {&mp, viable[c]});
        for (std::size_t b = a + 1; b < chosen.size() && ok; ++b) {
          ok = pair.TripleOkWith({&mp, viable[chosen[b]]});
        }
      }
      if (!ok) continue;
      std::vector<std::size_t> next;
      for (std::size_t j = idx + 1; j < domain.size(); ++j) {
        if (compat[c][domain[j]]) next.push_back(domain[j]);
      }
      chosen.push_back(c);
      if (extend(next)) return true;
      chosen.pop_back();
      const std::size_t still = maximize ? best.size() + 1 : goal;
      if (chosen.size() + distinct_supports(
              std::vector<std::size_t>(domain.begin() + idx + 1, domain.end())) <
          still) {
        return false;
      }
    }
    return false;
  };
  std::vector<std::size_t> all(nv);
  for (std::size_t i = 0; i < nv; ++i) all[i] = i;
  const bool found = extend(all);
  if (!maximize && !found) {
    throw NotFoundError("no S0 of size " + std::to_string(target) +
                        " exists among weight-" + std::to_string(w0) +
                        " vectors (best " + std::to_string(best.size()) + ")");
  }
  const std::vector<std::size_t>& pick = maximize ? best : chosen;
  std::vector<TernaryVector> out;
  for (const std::size_t c : pick) out.push_back(pool[viable[c]]);
  return PatternSet::Certify(VectorSet(m, std::move(out)));
}

}  // namespace capset
