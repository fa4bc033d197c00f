// Copyright 2026 The hampen developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "hampen/profile.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

namespace hampen {

namespace {

using std::uint32_t;
using std::uint64_t;

// Enumeration runs over a common-denominator integer rescaling of the model,
// in int64 when the coefficient mass fits, falling back to arbitrary
// precision otherwise. Values are value(x) * denom, exactly.
struct ScaledQubo {
    int n = 0;
    Integer denom = 1;
    Integer offset;
    std::vector<Integer> linear;
    std::vector<std::vector<Integer>> quad;  // symmetric, zero diagonal

    bool fits64 = false;
    long long offset64 = 0;
    std::vector<long long> linear64;
    std::vector<std::vector<long long>> quad64;
};

Integer lcm_positive(const Integer& a, const Integer& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

ScaledQubo scale_model(const Qubo& q) {
    ScaledQubo s;
    s.n = q.size();
    s.denom = denominator(q.offset());
    for (const auto& b : q.linear()) s.denom = lcm_positive(s.denom, denominator(b));
    for (const auto& [key, c] : q.quadratic())
        s.denom = lcm_positive(s.denom, denominator(c));

    auto scaled = [&](const Rational& v) -> Integer {
        return numerator(v) * (s.denom / denominator(v));
    };

    s.offset = scaled(q.offset());
    s.linear.reserve(static_cast<std::size_t>(s.n));
    for (const auto& b : q.linear()) s.linear.push_back(scaled(b));
    s.quad.assign(static_cast<std::size_t>(s.n),
                  std::vector<Integer>(static_cast<std::size_t>(s.n)));
    for (const auto& [key, c] : q.quadratic()) {
        const Integer v = scaled(c);
        s.quad[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second)] = v;
        s.quad[static_cast<std::size_t>(key.second)][static_cast<std::size_t>(key.first)] = v;
    }

    Integer mass = abs(s.offset);
    for (const auto& v : s.linear) mass += abs(v);
    for (const auto& [key, c] : q.quadratic()) mass += abs(scaled(c));
    s.fits64 = mass < (Integer(1) << 62);
    if (s.fits64) {
        s.offset64 = static_cast<long long>(s.offset);
        s.linear64.reserve(s.linear.size());
        for (const auto& v : s.linear)
            s.linear64.push_back(static_cast<long long>(v));
        s.quad64.assign(static_cast<std::size_t>(s.n),
                        std::vector<long long>(static_cast<std::size_t>(s.n)));
        for (int j = 0; j < s.n; ++j)
            for (int k = 0; k < s.n; ++k)
                s.quad64[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    static_cast<long long>(s.quad[static_cast<std::size_t>(j)]
                                                 [static_cast<std::size_t>(k)]);
    }
    return s;
}

template <class Int>
Int direct_value(const ScaledQubo& s, uint32_t mask, const Int& offset,
                 const std::vector<Int>& linear,
                 const std::vector<std::vector<Int>>& quad) {
    Int total = offset;
    for (uint32_t m = mask; m != 0; m &= m - 1) {
        const int j = std::countr_zero(m);
        total += linear[static_cast<std::size_t>(j)];
        for (uint32_t rest = m & (m - 1); rest != 0; rest &= rest - 1) {
            const int k = std::countr_zero(rest);
            total += quad[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        }
    }
    return total;
}

template <class Int>
struct ClassMin {
    bool seen = false;
    Int best{};
    uint64_t count = 0;
    uint32_t witness = 0;
};

template <class Int>
void record(std::vector<ClassMin<Int>>& acc, int n, int weight, uint32_t mask,
            const Int& value) {
    auto& slot = acc[static_cast<std::size_t>(weight)];
    if (!slot.seen || value < slot.best) {
        slot.seen = true;
        slot.best = value;
        slot.count = 1;
        slot.witness = mask;
    } else if (value == slot.best) {
        ++slot.count;
        if (Bitstring::lex_less_mask(mask, slot.witness, n)) slot.witness = mask;
    }
}

// Visits every mask exactly once via the Gray code sequence g(i) = i ^ (i>>1)
// restricted to the index range [lo, hi). Each step flips a single bit, so
// the running value is updated with one row sum.
template <class Int, class Visit>
void gray_walk(const ScaledQubo& s, const Int& offset,
               const std::vector<Int>& linear,
               const std::vector<std::vector<Int>>& quad, uint64_t lo,
               uint64_t hi, Visit&& visit) {
    uint32_t mask = static_cast<uint32_t>(lo ^ (lo >> 1));
    Int value = direct_value(s, mask, offset, linear, quad);
    int weight = std::popcount(mask);
    visit(mask, weight, value);
    for (uint64_t i = lo; i + 1 < hi; ++i) {
        const uint32_t next = static_cast<uint32_t>((i + 1) ^ ((i + 1) >> 1));
        const int j = std::countr_zero(mask ^ next);
        Int delta = linear[static_cast<std::size_t>(j)];
        const auto& row = quad[static_cast<std::size_t>(j)];
        for (uint32_t rest = (mask & next) & ~(uint32_t{1} << j); rest != 0;
             rest &= rest - 1)
            delta += row[static_cast<std::size_t>(std::countr_zero(rest))];
        if (next & (uint32_t{1} << j)) {
            value += delta;
            ++weight;
        } else {
            value -= delta;
            --weight;
        }
        mask = next;
        visit(mask, weight, value);
    }
}

int resolve_workers(int workers, uint64_t total) {
    if (workers <= 0)
        workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (total < (uint64_t{1} << 16)) workers = 1;
    if (static_cast<uint64_t>(workers) > total)
        workers = static_cast<int>(total);
    return workers;
}

template <class Int>
std::vector<ClassMin<Int>> profile_pass(const ScaledQubo& s, const Int& offset,
                                        const std::vector<Int>& linear,
                                        const std::vector<std::vector<Int>>& quad,
                                        int workers) {
    const uint64_t total = uint64_t{1} << s.n;
    workers = resolve_workers(workers, total);

    std::vector<std::vector<ClassMin<Int>>> parts(
        static_cast<std::size_t>(workers),
        std::vector<ClassMin<Int>>(static_cast<std::size_t>(s.n) + 1));
    {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            const uint64_t lo = total * w / static_cast<uint64_t>(workers);
            const uint64_t hi = total * (w + 1) / static_cast<uint64_t>(workers);
            auto run = [&, w, lo, hi] {
                auto& acc = parts[static_cast<std::size_t>(w)];
                gray_walk(s, offset, linear, quad, lo, hi,
                          [&](uint32_t mask, int weight, const Int& value) {
                              record(acc, s.n, weight, mask, value);
                          });
            };
            if (workers == 1)
                run();
            else
                threads.emplace_back(run);
        }
        for (auto& t : threads) t.join();
    }

    // Exact merge; tie on value breaks to the lexicographically smaller
    // witness, so the result is independent of the chunking.
    auto merged = std::move(parts.front());
    for (std::size_t p = 1; p < parts.size(); ++p) {
        for (std::size_t w = 0; w < merged.size(); ++w) {
            const auto& other = parts[p][w];
            if (!other.seen) continue;
            auto& slot = merged[w];
            if (!slot.seen || other.best < slot.best) {
                slot = other;
            } else if (other.best == slot.best) {
                slot.count += other.count;
                if (Bitstring::lex_less_mask(other.witness, slot.witness, s.n))
                    slot.witness = other.witness;
            }
        }
    }
    return merged;
}

template <class Int>
WeightProfile profile_to_rational(const ScaledQubo& s,
                                  const std::vector<ClassMin<Int>>& acc) {
    WeightProfile out;
    out.n = s.n;
    for (int w = 0; w <= s.n; ++w) {
        const auto& slot = acc[static_cast<std::size_t>(w)];
        out.minima.emplace_back(Integer(slot.best), s.denom);
        out.witnesses.emplace_back(s.n, slot.witness);
        out.counts.push_back(slot.count);
    }
    return out;
}

void check_enumeration_guard(int n) {
    if (n > kEnumerationGuard)
        throw CapacityError("exhaustive enumeration is limited to 24 variables");
}

// Counts assignments with value exactly `target` (a class minimum, so its
// rescaling is integral).
uint64_t count_at_energy(const ScaledQubo& s, const Rational& target,
                         int workers) {
    const Integer scaled_target =
        numerator(target) * (s.denom / denominator(target));
    const uint64_t total = uint64_t{1} << s.n;
    workers = resolve_workers(workers, total);
    std::vector<uint64_t> parts(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        const uint64_t lo = total * w / static_cast<uint64_t>(workers);
        const uint64_t hi = total * (w + 1) / static_cast<uint64_t>(workers);
        auto run = [&, w, lo, hi] {
            uint64_t hits = 0;
            if (s.fits64) {
                const long long t = static_cast<long long>(scaled_target);
                gray_walk(s, s.offset64, s.linear64, s.quad64, lo, hi,
                          [&](uint32_t, int, long long value) {
                              if (value == t) ++hits;
                          });
            } else {
                gray_walk(s, s.offset, s.linear, s.quad, lo, hi,
                          [&](uint32_t, int, const Integer& value) {
                              if (value == scaled_target) ++hits;
                          });
            }
            parts[static_cast<std::size_t>(w)] = hits;
        };
        if (workers == 1)
            run();
        else
            threads.emplace_back(run);
    }
    for (auto& t : threads) t.join();
    uint64_t total_hits = 0;
    for (uint64_t h : parts) total_hits += h;
    return total_hits;
}

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint64_t result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * static_cast<uint64_t>(n - k + i) /
                 static_cast<uint64_t>(i);
    return result;
}

}  // namespace

const Rational& WeightProfile::ground_energy() const {
    return *std::min_element(minima.begin(), minima.end());
}

std::uint64_t WeightProfile::ground_set_size() const {
    const Rational& ground = ground_energy();
    std::uint64_t size = 0;
    for (std::size_t w = 0; w < minima.size(); ++w)
        if (minima[w] == ground) size += counts[w];
    return size;
}

WeightProfile weight_profile(const Model& model, int workers) {
    const Qubo q = as_qubo(model);
    check_enumeration_guard(q.size());
    const ScaledQubo s = scale_model(q);
    if (s.fits64)
        return profile_to_rational(
            s, profile_pass(s, s.offset64, s.linear64, s.quad64, workers));
    return profile_to_rational(
        s, profile_pass(s, s.offset, s.linear, s.quad, workers));
}

PenaltyReport min_penalty(const Model& model, int r, int workers) {
    const int n = model_size(model);
    if (r < 0 || r > n)
        throw DomainError("target weight out of range");
    const Qubo q = as_qubo(model);
    check_enumeration_guard(n);
    const WeightProfile profile = weight_profile(model, workers);

    PenaltyReport report;
    report.target_weight = r;
    report.ground_energy = profile.minima[static_cast<std::size_t>(r)];

    int best_w = -1;
    for (int w = 0; w <= n; ++w) {
        if (w == r) continue;
        if (best_w < 0 ||
            profile.minima[static_cast<std::size_t>(w)] <
                profile.minima[static_cast<std::size_t>(best_w)] ||
            (profile.minima[static_cast<std::size_t>(w)] ==
                 profile.minima[static_cast<std::size_t>(best_w)] &&
             profile.witnesses[static_cast<std::size_t>(w)].lex_less(
                 profile.witnesses[static_cast<std::size_t>(best_w)])))
            best_w = w;
    }
    report.gap = profile.minima[static_cast<std::size_t>(best_w)] -
                 report.ground_energy;
    report.witness = profile.witnesses[static_cast<std::size_t>(best_w)];
    report.ground_set_size =
        count_at_energy(scale_model(q), report.ground_energy, workers);
    report.exact_penalty =
        report.gap > 0 &&
        profile.counts[static_cast<std::size_t>(r)] == binomial(n, r);
    return report;
}

Rational spectral_gap(const Model& model, int workers) {
    const WeightProfile profile = weight_profile(model, workers);
    // The two smallest distinct energies both appear among per-weight minima
    // or strictly inside a class; a dedicated scan keeps this exact without
    // storing the spectrum. Reuse the profile pass per weight is not enough,
    // so walk once more tracking the two smallest distinct values.
    const Qubo q = as_qubo(model);
    const ScaledQubo s = scale_model(q);
    const uint64_t total = uint64_t{1} << s.n;
    const int workers_used = resolve_workers(workers, total);

    struct TwoSmallest {
        bool seen0 = false, seen1 = false;
        Integer e0, e1;
        void add(const Integer& v) {
            if (!seen0) {
                seen0 = true;
                e0 = v;
            } else if (v < e0) {
                e1 = e0;
                seen1 = true;
                e0 = v;
            } else if (v > e0 && (!seen1 || v < e1)) {
                seen1 = true;
                e1 = v;
            }
        }
    };

    std::vector<TwoSmallest> parts(static_cast<std::size_t>(workers_used));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers_used; ++w) {
        const uint64_t lo = total * w / static_cast<uint64_t>(workers_used);
        const uint64_t hi = total * (w + 1) / static_cast<uint64_t>(workers_used);
        auto run = [&, w, lo, hi] {
            auto& acc = parts[static_cast<std::size_t>(w)];
            if (s.fits64)
                gray_walk(s, s.offset64, s.linear64, s.quad64, lo, hi,
                          [&](uint32_t, int, long long value) {
                              acc.add(Integer(value));
                          });
            else
                gray_walk(s, s.offset, s.linear, s.quad, lo, hi,
                          [&](uint32_t, int, const Integer& value) {
                              acc.add(value);
                          });
        };
        if (workers_used == 1)
            run();
        else
            threads.emplace_back(run);
    }
    for (auto& t : threads) t.join();

    TwoSmallest merged;
    for (const auto& part : parts) {
        if (part.seen0) merged.add(part.e0);
        if (part.seen1) merged.add(part.e1);
    }
    if (!merged.seen1)
        throw DomainError("constant model has no spectral gap");
    return Rational(merged.e1 - merged.e0, s.denom);
}

WeightClassScan scan_weight_class(const Model& model, int w) {
    const int n = model_size(model);
    check_enumeration_guard(n);
    if (w < 0 || w > n) throw DomainError("weight out of range");
    const Qubo q = as_qubo(model);
    const ScaledQubo s = scale_model(q);

    bool seen = false;
    Integer best, worst;
    uint32_t witness = 0;
    auto visit = [&](uint32_t mask, const Integer& value) {
        if (!seen) {
            seen = true;
            best = worst = value;
            witness = mask;
            return;
        }
        if (value < best || (value == best &&
                             Bitstring::lex_less_mask(mask, witness, n))) {
            if (value < best) best = value;
            witness = mask;
        }
        if (value > worst) worst = value;
    };

    if (w == 0) {
        visit(0, direct_value(s, 0, s.offset, s.linear, s.quad));
    } else {
        // Gosper's hack over all masks of weight w.
        const uint32_t limit = n == 32 ? 0 : (uint32_t{1} << n);
        uint32_t mask = (uint32_t{1} << w) - 1;
        while (mask < limit) {
            visit(mask, direct_value(s, mask, s.offset, s.linear, s.quad));
            const uint32_t c = mask & (~mask + 1);
            const uint32_t r = mask + c;
            if (r >= limit) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }

    WeightClassScan scan;
    scan.minimum = Rational(best, s.denom);
    scan.maximum = Rational(worst, s.denom);
    scan.argmin = Bitstring(n, witness);
    return scan;
}

std::vector<std::uint32_t> ground_set(const Model& model) {
    const Qubo q = as_qubo(model);
    check_enumeration_guard(q.size());
    const ScaledQubo s = scale_model(q);
    const WeightProfile profile = weight_profile(model);
    const Rational ground = profile.ground_energy();
    const Integer target = numerator(ground) * (s.denom / denominator(ground));

    std::vector<uint32_t> out;
    if (s.fits64) {
        const long long t = static_cast<long long>(target);
        gray_walk(s, s.offset64, s.linear64, s.quad64, 0, uint64_t{1} << s.n,
                  [&](uint32_t mask, int, long long value) {
                      if (value == t) out.push_back(mask);
                  });
    } else {
        gray_walk(s, s.offset, s.linear, s.quad, 0, uint64_t{1} << s.n,
                  [&](uint32_t mask, int, const Integer& value) {
                      if (value == target) out.push_back(mask);
                  });
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hampen
