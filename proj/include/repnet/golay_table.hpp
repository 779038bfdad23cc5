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
//
// Closed-form logical error rate of the [23,12,7] Golay code under the
// half-word-error-rate approximation; the protocol never aborts, so the
// success probability is identically 1. The transcription is validated in the
// tests: the f_n = 0 slice must equal half the exact word error rate of a
// perfect three-error-correcting code, and a sampling decoder reports the
// residual approximation gap at nonzero f_n.

#ifndef REPNET_GOLAY_TABLE_HPP
#define REPNET_GOLAY_TABLE_HPP

#include <cmath>

namespace repnet::detail {

inline double golay_fbar(double fu, double fn) {
    const double u = fu;
    const double n = fn;
    const double m = n + u - 1.0;  // minus the clean-symbol probability
    auto P = [](double x, int e) { return std::pow(x, static_cast<double>(e)); };

    double s = 0.0;
    s += -P(n, 23) / 4096.0;
    s += 23.0 * m * P(n, 22) / 2048.0;
    s += -253.0 * m * m * P(n, 21) / 1024.0;
    s += (1771.0 / 512.0) * P(m, 3) * P(n, 20);
    s += -(8855.0 / 256.0) * P(m, 4) * P(n, 19);
    s += (33649.0 / 128.0) * P(m, 5) * P(n, 18);
    s += -(100947.0 / 64.0) * P(m, 6) * P(n, 17);
    s += (245157.0 / 32.0) * P(m, 7) * P(n, 16);
    s += -30613.0 * P(m, 8) * P(n, 15);
    s += -(253.0 / 16.0) * (n - 1) * P(m, 7) * P(n, 15);
    s += 101200.0 * P(m, 9) * P(n, 14);
    s += (3795.0 / 8.0) * (n - 1) * P(m, 8) * P(n, 14);
    s += -272734.0 * P(m, 10) * P(n, 13);
    s += -(26565.0 / 4.0) * (n - 1) * P(m, 9) * P(n, 13);
    s += 560924.0 * P(m, 11) * P(n, 12);
    s += (115115.0 / 2.0) * (n - 1) * P(m, 10) * P(n, 12);
    s += -695520.0 * P(m, 12) * P(n, 11);
    s += -319424.0 * (n - 1) * P(m, 11) * P(n, 11);
    s += (8855.0 / 2.0) * P(m, 11) * (-n + 2 * u + 1) * P(n, 11);
    s += 949256.0 * (n - 1) * P(m, 12) * P(n, 10);
    s += -97405.0 * P(m, 12) * (-n + 2 * u + 1) * P(n, 10);
    s += 779240.0 * P(m, 13) * (-n + 2 * u + 1) * P(n, 9);
    s += 18975.0 * P(m, 13) * (-n + 6 * u + 1) * P(n, 9);
    s += -485760.0 * P(m, 14) * (-n + 6 * u + 1) * P(n, 8);
    s += -2277.0 * P(m, 14) * (-n + 14 * u + 1) * P(n, 8);
    s += 32384.0 * P(m, 15) * (-n + 14 * u + 1) * P(n, 7);
    s += (253.0 / 2.0) * (n - 1) * P(m, 14) * (-n + 14 * u + 1) * P(n, 7);
    s += 212520.0 * P(m, 14) * (-P(n - 1, 2) + 10 * u * (n - 1) + 8 * u * u) * P(n, 7);
    s += -100947.0 * (n - 1) * P(m, 15) * (-n + 14 * u + 1) * P(n, 6);
    s += -28336.0 * P(m, 16) * (-n + 2 * u + 1) * (-n + 14 * u + 1) * P(n, 5);
    s += -5313.0 * P(m, 16) * (P(n - 1, 2) - 15 * u * (n - 1) + 30 * u * u) * P(n, 5);
    s += 8855.0 * P(m, 17) * (P(n - 1, 2) - 17 * u * (n - 1) + 90 * u * u) * P(n, 4);
    s += -1771.0 * P(m, 17) *
         (P(n - 1, 3) - 17 * u * P(n - 1, 2) + 138 * u * u * (n - 1) + 96 * P(u, 3)) * P(n, 3);
    s += -253.0 * P(m, 18) *
         (-P(n - 1, 3) + 18 * u * P(n - 1, 2) - 171 * u * u * (n - 1) + 90 * P(u, 3)) * n * n;
    s += 23.0 * P(m, 19) *
         (-P(n - 1, 3) + 19 * u * P(n - 1, 2) - 190 * u * u * (n - 1) + 560 * P(u, 3)) * n;
    s += P(m, 23);
    s += -23.0 * u * P(m, 22);
    s += 253.0 * u * u * P(m, 21);
    s += -1771.0 * P(u, 3) * P(m, 20);
    s += 1.0;
    return 0.5 * s;
}

}  // namespace repnet::detail

#endif  // REPNET_GOLAY_TABLE_HPP
