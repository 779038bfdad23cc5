// Copyright 2026 The repnet Authors
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

#ifndef REPNET_CODES_HPP
#define REPNET_CODES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "repnet/golay_table.hpp"
#include "repnet/steane_table.hpp"

namespace repnet {

struct CodeRates {
    double fbar_u = 0.0;  ///< logical flip rate
    double p_succ = 1.0;  ///< probability of not aborting
};

/// Binary linear code used for measurement decoding of a CSS block. The
/// logical mask is the parity functional that carries the encoded bit; it
/// must lie outside the stabilizer part of the row space.
struct ClassicalCode {
    int n = 0;
    std::vector<uint32_t> codewords;
    uint32_t logical_mask = 0;

    /// [7,4,3] Hamming code, logical bit = overall parity. This is the
    /// measurement code of the seven-qubit Steane code.
    static ClassicalCode hamming7() {
        ClassicalCode c;
        c.n = 7;
        c.logical_mask = 0x7f;
        // Parity checks with column j+1 written in binary.
        const uint32_t checks[3] = {0b1010101, 0b0110011, 0b0001111};
        for (uint32_t word = 0; word < 128; ++word) {
            bool ok = true;
            for (uint32_t h : checks) {
                if (std::popcount(word & h) % 2 != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) c.codewords.push_back(word);
        }
        return c;
    }

    /// [23,12,7] binary Golay code from its cyclic generator polynomial,
    /// logical bit = overall parity.
    static ClassicalCode golay23() {
        ClassicalCode c;
        c.n = 23;
        c.logical_mask = 0x7fffff;
        const uint32_t gen = 0b101011100011;  // x^11+x^9+x^7+x^6+x^5+x+1
        std::vector<uint32_t> rows;
        for (int i = 0; i < 12; ++i) rows.push_back(gen << i);
        c.codewords.reserve(4096);
        for (uint32_t msg = 0; msg < 4096; ++msg) {
            uint32_t word = 0;
            for (int i = 0; i < 12; ++i) {
                if ((msg >> i) & 1) word ^= rows[i];
            }
            c.codewords.push_back(word);
        }
        return c;
    }
};

/// Most-likely-codeword decoding of a word with erasures. Positions in
/// `erasure_mask` are compatible with either bit value; the remaining
/// positions of `word` are compared against each codeword. Returns the full
/// tie-set of maximally likely codewords.
inline std::vector<uint32_t> decode_most_likely(uint32_t word, uint32_t erasure_mask,
                                                const ClassicalCode& code, double f_u,
                                                double /*f_n*/) {
    // The likelihood of candidate c is f_u^t (1-f_u)^(m-t) with t the flip
    // count on non-erased positions, so the ordering depends only on t and on
    // which side of 1/2 f_u lies.
    const uint32_t keep = ~erasure_mask;
    int best = -1;
    std::vector<uint32_t> ties;
    for (uint32_t c : code.codewords) {
        int t = std::popcount((word ^ c) & keep & ((1u << code.n) - 1));
        if (f_u > 0.5) t = -t;  // flips more likely than clean symbols
        if (best < 0 || t < best) {
            best = t;
            ties.assign(1, c);
        } else if (t == best) {
            ties.push_back(c);
        }
    }
    if (f_u == 0.5 && erasure_mask != (1u << code.n) - 1u) {
        // Every codeword is equally likely.
        return code.codewords;
    }
    return ties;
}

/// Exact logical error rate and success probability by enumeration of all 3^n
/// loss/flip patterns. Each position is independently lost with probability
/// f_n and (if not lost) flipped with probability f_u; patterns with more
/// than n_max losses are fatal. Ties in the decoder contribute fractional
/// logical errors. Pass n_max < 0 for a never-abort policy.
inline CodeRates enumerate_logical_rate(const ClassicalCode& code, int n_max, double f_u,
                                        double f_n) {
    if (code.n > 23) throw std::invalid_argument("enumeration infeasible beyond n=23");
    if (!(f_u >= 0 && f_u <= 1 && f_n >= 0 && f_n <= 1)) {
        throw std::invalid_argument("rates out of [0,1]");
    }
    const uint32_t full = (1u << code.n) - 1u;
    if (n_max < 0) n_max = code.n;
    double fbar = 0.0;
    double p_fatal = 0.0;
    // Outer loop over erasure sets, inner over flip sets of the complement.
    for (uint32_t lost = 0;; ++lost) {
        const int n_lost = std::popcount(lost);
        const double p_lost =
            std::pow(f_n, n_lost) * std::pow(1.0 - f_n, code.n - n_lost);
        if (n_lost > n_max) {
            p_fatal += p_lost;
        } else if (p_lost > 0.0) {
            const uint32_t keep = full & ~lost;
            const int m = code.n - n_lost;
            // Iterate over subsets of `keep`.
            uint32_t flips = 0;
            while (true) {
                const int n_flip = std::popcount(flips);
                const double p =
                    p_lost * std::pow(f_u, n_flip) * std::pow(1.0 - f_u, m - n_flip);
                if (p > 0.0) {
                    auto ties = decode_most_likely(flips, lost, code, f_u, f_n);
                    int wrong = 0;
                    for (uint32_t c : ties) {
                        wrong += std::popcount(c & code.logical_mask) % 2;
                    }
                    fbar += p * wrong / static_cast<double>(ties.size());
                }
                if (flips == keep) break;
                flips = (flips - keep) & keep;  // next subset
            }
        }
        if (lost == full) break;
    }
    return CodeRates{fbar, 1.0 - p_fatal};
}

namespace detail {

/// The closed-form polynomials cancel to values like -1e-15 at the edges of
/// the parameter square; pin them back into range.
inline CodeRates clamp_rates(double fbar, double p_succ) {
    return CodeRates{std::clamp(fbar, 0.0, 1.0), std::clamp(p_succ, 0.0, 1.0)};
}

}  // namespace detail

/// Tabulated Steane rates (the production path; the enumeration above is the
/// independent oracle).
inline CodeRates steane_table_rates(double f_u, double f_n, int n_max) {
    if (n_max < 0 || n_max > 7) throw std::invalid_argument("steane: n_max must be in 0..7");
    return detail::clamp_rates(detail::steane_fbar(f_u, f_n, n_max),
                               detail::steane_psucc(f_n, n_max));
}

/// Tabulated Golay rates under the half-word-error-rate approximation.
inline CodeRates golay_table_rates(double f_u, double f_n) {
    if (!(f_u >= 0 && f_u <= 1 && f_n >= 0 && f_n <= 1)) {
        throw std::invalid_argument("rates out of [0,1]");
    }
    return detail::clamp_rates(detail::golay_fbar(f_u, f_n), 1.0);
}

/// Baseline without encoding: one physical qubit per logical qubit, any loss
/// is fatal.
inline CodeRates unencoded_rates(double f_u, double f_n) {
    return CodeRates{f_u, 1.0 - f_n};
}

/// An [[n,k,d]] code abstracted to the quantities the network analysis needs.
struct CodeSpec {
    std::string name;
    int n = 1;
    int k = 1;
    int d = 1;
    int n_max = 0;  ///< abort threshold; n means never abort
    std::function<CodeRates(double, double)> rate_fn;

    CodeRates rates(double f_u, double f_n) const { return rate_fn(f_u, f_n); }

    static CodeSpec none() {
        return CodeSpec{"none", 1, 1, 1, 0, [](double fu, double fn) {
                            return unencoded_rates(fu, fn);
                        }};
    }

    static CodeSpec steane(int n_max) {
        if (n_max < 0 || n_max > 7) throw std::invalid_argument("steane: n_max must be in 0..7");
        return CodeSpec{"steane:" + std::to_string(n_max), 7, 1, 3, n_max,
                        [n_max](double fu, double fn) {
                            return steane_table_rates(fu, fn, n_max);
                        }};
    }

    static CodeSpec golay() {
        return CodeSpec{"golay", 23, 1, 7, 23, [](double fu, double fn) {
                            return golay_table_rates(fu, fn);
                        }};
    }

    /// Parses the CLI selector: none | steane:<n_max> | golay.
    static CodeSpec parse(const std::string& sel) {
        if (sel == "none") return none();
        if (sel == "golay") return golay();
        if (sel.rfind("steane:", 0) == 0) {
            int n_max;
            try {
                n_max = std::stoi(sel.substr(7));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad code selector '" + sel + "'");
            }
            return steane(n_max);
        }
        throw std::invalid_argument("unknown code '" + sel + "'");
    }
};

}  // namespace repnet

#endif  // REPNET_CODES_HPP
