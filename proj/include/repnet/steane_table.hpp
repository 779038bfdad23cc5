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
// Closed-form logical error rate and success probability of the seven-qubit
// Steane code under most-likely-codeword decoding with a loss-count abort
// threshold n_max in {0..7}. The polynomials are checked against an exhaustive
// 3^7 pattern enumeration in the test suite; do not "simplify" them by hand.

#ifndef REPNET_STEANE_TABLE_HPP
#define REPNET_STEANE_TABLE_HPP

#include <cmath>
#include <stdexcept>

namespace repnet::detail {

inline double pw(double x, int e) { return std::pow(x, static_cast<double>(e)); }

inline double steane_fbar(double fu, double fn, int n_max) {
    const double u = fu;
    const double n = fn;
    switch (n_max) {
        case 0:
            return pw(n - 1, 7) * u * u *
                   (48 * pw(u, 5) - 168 * pw(u, 4) + 252 * pw(u, 3) - 210 * u * u + 98 * u - 21);
        case 1:
            return pw(n - 1, 6) * u *
                   (48 * (n - 1) * pw(u, 6) - 168 * (n - 1) * pw(u, 5) + 252 * (n - 1) * pw(u, 4) -
                    210 * (n - 1) * pw(u, 3) + 14 * (9 * n - 7) * u * u + 21 * (1 - 3 * n) * u +
                    21 * n);
        case 2:
            return pw(n - 1, 5) * u *
                   (48 * pw(n - 1, 2) * pw(u, 6) - 168 * pw(n - 1, 2) * pw(u, 5) +
                    252 * pw(n - 1, 2) * pw(u, 4) - 210 * pw(n - 1, 2) * pw(u, 3) +
                    14 * (n * (3 * n - 16) + 7) * u * u + 21 * (n * (3 * n + 4) - 1) * u -
                    21 * n * (2 * n + 1));
        case 3:
            return 0.5 * pw(n - 1, 4) *
                   (pw(n, 3) * (96 * pw(u, 7) - 336 * pw(u, 6) + 504 * pw(u, 5) - 420 * pw(u, 4) +
                                308 * pw(u, 3) - 210 * u * u + 84 * u + 7) -
                    2 * n * n * u *
                        (144 * pw(u, 6) - 504 * pw(u, 5) + 756 * pw(u, 4) - 630 * pw(u, 3) +
                         266 * u * u - 21 * u - 21) +
                    2 * n * u *
                        (144 * pw(u, 6) - 504 * pw(u, 5) + 756 * pw(u, 4) - 630 * pw(u, 3) +
                         322 * u * u - 105 * u + 21) +
                    2 * u * u *
                        (-48 * pw(u, 5) + 168 * pw(u, 4) - 252 * pw(u, 3) + 210 * u * u - 98 * u +
                         21));
        case 4:
            return 0.5 * pw(n - 1, 3) *
                   (3 * pw(n, 4) *
                        (32 * pw(u, 7) - 112 * pw(u, 6) + 168 * pw(u, 5) - 140 * pw(u, 4) +
                         84 * pw(u, 3) - 42 * u * u + 14 * u - 7) -
                    pw(n, 3) * (384 * pw(u, 7) - 1344 * pw(u, 6) + 2016 * pw(u, 5) -
                                1680 * pw(u, 4) + 840 * pw(u, 3) - 252 * u * u + 42 * u + 7) +
                    12 * n * n * u * u *
                        (48 * pw(u, 5) - 168 * pw(u, 4) + 252 * pw(u, 3) - 210 * u * u + 98 * u -
                         21) -
                    6 * n * u *
                        (64 * pw(u, 6) - 224 * pw(u, 5) + 336 * pw(u, 4) - 280 * pw(u, 3) +
                         140 * u * u - 42 * u + 7) +
                    2 * u * u *
                        (48 * pw(u, 5) - 168 * pw(u, 4) + 252 * pw(u, 3) - 210 * u * u + 98 * u -
                         21));
        case 5:
            return 0.5 * pw(n - 1, 2) *
                   (6 * pw(n, 5) * u *
                        (16 * pw(u, 6) - 56 * pw(u, 5) + 84 * pw(u, 4) - 70 * pw(u, 3) +
                         42 * u * u - 21 * u + 7) -
                    2 * pw(n, 4) *
                        (240 * pw(u, 7) - 840 * pw(u, 6) + 1260 * pw(u, 5) - 1050 * pw(u, 4) +
                         546 * pw(u, 3) - 189 * u * u + 42 * u - 7) +
                    pw(n, 3) * (960 * pw(u, 7) - 3360 * pw(u, 6) + 5040 * pw(u, 5) -
                                4200 * pw(u, 4) + 2016 * pw(u, 3) - 504 * u * u + 42 * u + 7) -
                    6 * n * n * u *
                        (160 * pw(u, 6) - 560 * pw(u, 5) + 840 * pw(u, 4) - 700 * pw(u, 3) +
                         336 * u * u - 84 * u + 7) +
                    2 * n * u *
                        (240 * pw(u, 6) - 840 * pw(u, 5) + 1260 * pw(u, 4) - 1050 * pw(u, 3) +
                         518 * u * u - 147 * u + 21) +
                    2 * u * u *
                        (-48 * pw(u, 5) + 168 * pw(u, 4) - 252 * pw(u, 3) + 210 * u * u - 98 * u +
                         21));
        case 6:
            return pw(n, 7) * (48 * pw(u, 7) - 168 * pw(u, 6) + 252 * pw(u, 5) - 210 * pw(u, 4) +
                               126 * pw(u, 3) - 63 * u * u + 21 * u - 3.5) -
                   10.5 * pw(n, 6) * pw(2 * u - 1, 3) *
                       (4 * pw(u, 4) - 8 * pw(u, 3) + 6 * u * u - 2 * u + 1) +
                   10.5 * pw(n, 5) * pw(2 * u - 1, 3) *
                       (12 * pw(u, 4) - 24 * pw(u, 3) + 18 * u * u - 6 * u + 1) -
                   105 * pw(n, 4) * u * pw(2 * u - 1, 3) * (2 * pw(u, 3) - 4 * u * u + 3 * u - 1) +
                   3.5 * pw(n, 3) * pw(2 * u - 1, 3) *
                       (60 * pw(u, 4) - 120 * pw(u, 3) + 90 * u * u - 30 * u - 1) -
                   63 * n * n * u * pw(2 * u - 1, 3) * (2 * pw(u, 3) - 4 * u * u + 3 * u - 1) +
                   21 * n * u * pw(2 * u - 1, 3) * (2 * pw(u, 3) - 4 * u * u + 3 * u - 1) +
                   u * u *
                       (-48 * pw(u, 5) + 168 * pw(u, 4) - 252 * pw(u, 3) + 210 * u * u - 98 * u +
                        21);
        case 7:
            return 3 * pw(n, 7) * pw(2 * u - 1, 3) *
                       (2 * pw(u, 4) - 4 * pw(u, 3) + 3 * u * u - u + 1) -
                   10.5 * pw(n, 6) * pw(2 * u - 1, 3) *
                       (4 * pw(u, 4) - 8 * pw(u, 3) + 6 * u * u - 2 * u + 1) +
                   10.5 * pw(n, 5) * pw(2 * u - 1, 3) *
                       (12 * pw(u, 4) - 24 * pw(u, 3) + 18 * u * u - 6 * u + 1) -
                   105 * pw(n, 4) * u * pw(2 * u - 1, 3) * (2 * pw(u, 3) - 4 * u * u + 3 * u - 1) +
                   3.5 * pw(n, 3) * pw(2 * u - 1, 3) *
                       (60 * pw(u, 4) - 120 * pw(u, 3) + 90 * u * u - 30 * u - 1) -
                   63 * n * n * u * pw(2 * u - 1, 3) * (2 * pw(u, 3) - 4 * u * u + 3 * u - 1) +
                   21 * n * u * pw(2 * u - 1, 3) * (2 * pw(u, 3) - 4 * u * u + 3 * u - 1) +
                   u * u *
                       (-48 * pw(u, 5) + 168 * pw(u, 4) - 252 * pw(u, 3) + 210 * u * u - 98 * u +
                        21);
        default:
            throw std::invalid_argument("steane: n_max must be in 0..7");
    }
}

inline double steane_psucc(double fn, int n_max) {
    const double n = fn;
    switch (n_max) {
        case 0: return pw(1 - n, 7);
        case 1: return pw(n - 1, 6) * (6 * n + 1);
        case 2: return -pw(n - 1, 5) * (15 * n * n + 5 * n + 1);
        case 3: return pw(n - 1, 4) * (20 * pw(n, 3) + 10 * n * n + 4 * n + 1);
        case 4: return -15 * pw(n, 7) + 35 * pw(n, 6) - 21 * pw(n, 5) + 1;
        case 5: return 6 * pw(n, 7) - 7 * pw(n, 6) + 1;
        case 6: return 1 - pw(n, 7);
        case 7: return 1.0;
        default: throw std::invalid_argument("steane: n_max must be in 0..7");
    }
}

}  // namespace repnet::detail

#endif  // REPNET_STEANE_TABLE_HPP
