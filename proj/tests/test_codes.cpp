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

#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "repnet/codes.hpp"

using namespace repnet;

TEST_CASE("Hamming [7,4,3] construction") {
    ClassicalCode c = ClassicalCode::hamming7();
    REQUIRE(c.codewords.size() == 16);
    std::map<int, int> weights;
    for (uint32_t w : c.codewords) weights[std::popcount(w)]++;
    CHECK(weights[0] == 1);
    CHECK(weights[3] == 7);
    CHECK(weights[4] == 7);
    CHECK(weights[7] == 1);
}

TEST_CASE("Golay [23,12,7] construction") {
    ClassicalCode c = ClassicalCode::golay23();
    REQUIRE(c.codewords.size() == 4096);
    std::map<int, int> weights;
    for (uint32_t w : c.codewords) weights[std::popcount(w)]++;
    CHECK(weights[0] == 1);
    CHECK(weights[7] == 253);
    CHECK(weights[8] == 506);
    CHECK(weights[11] == 1288);
    CHECK(weights[12] == 1288);
    CHECK(weights[15] == 506);
    CHECK(weights[16] == 253);
    CHECK(weights[23] == 1);
}

TEST_CASE("most-likely decoding") {
    ClassicalCode c = ClassicalCode::hamming7();

    auto clean = decode_most_likely(0, 0, c, 0.01, 0.0);
    REQUIRE(clean.size() == 1);
    CHECK(clean[0] == 0);

    // Any single flip is corrected (distance 3).
    for (int i = 0; i < 7; ++i) {
        auto t = decode_most_likely(1u << i, 0, c, 0.01, 0.0);
        REQUIRE(t.size() == 1);
        CHECK(t[0] == 0);
    }

    // With everything erased, all codewords tie.
    auto all = decode_most_likely(0, 0x7f, c, 0.01, 0.0);
    CHECK(all.size() == 16);

    // Flip-likely regime inverts the metric.
    auto flipped = decode_most_likely(0x7f, 0, c, 0.9, 0.0);
    REQUIRE(flipped.size() == 1);
    CHECK(flipped[0] == 0x7f);
}

TEST_CASE("enumeration limiting cases") {
    ClassicalCode c = ClassicalCode::hamming7();
    CodeRates perfect = enumerate_logical_rate(c, 7, 0.0, 0.0);
    CHECK(perfect.fbar_u == 0.0);
    CHECK(perfect.p_succ == 1.0);

    // All positions always erased: the decoder guesses among all codewords,
    // half of which have odd parity.
    CodeRates blind = enumerate_logical_rate(c, 7, 0.0, 1.0);
    CHECK(blind.fbar_u == Catch::Approx(0.5));

    // n_max = 0 aborts whenever anything is lost.
    CodeRates strict = enumerate_logical_rate(c, 0, 0.0, 0.3);
    CHECK(strict.p_succ == Catch::Approx(std::pow(0.7, 7)));

    // Never-abort policy.
    CodeRates never = enumerate_logical_rate(c, -1, 0.1, 0.3);
    CHECK(never.p_succ == 1.0);
}

TEST_CASE("Steane table matches enumeration on a spot grid") {
    ClassicalCode c = ClassicalCode::hamming7();
    for (int n_max : {0, 2, 5, 7}) {
        for (double fu : {0.0, 0.03, 0.12}) {
            for (double fn : {0.0, 0.05, 0.18}) {
                CAPTURE(n_max, fu, fn);
                CodeRates e = enumerate_logical_rate(c, n_max, fu, fn);
                CodeRates t = steane_table_rates(fu, fn, n_max);
                CHECK(t.fbar_u == Catch::Approx(e.fbar_u).margin(1e-10));
                CHECK(t.p_succ == Catch::Approx(e.p_succ).margin(1e-10));
            }
        }
    }
    CHECK_THROWS_AS(steane_table_rates(0.1, 0.1, 8), std::invalid_argument);
}

TEST_CASE("Golay polynomial limiting cases") {
    CHECK(golay_table_rates(0.0, 0.0).fbar_u == 0.0);
    CHECK(golay_table_rates(0.0, 0.0).p_succ == 1.0);

    // f_n = 0 slice: half the word error rate of a perfect three-error-
    // correcting code of length 23.
    for (double fu : {0.005, 0.02, 0.08, 0.2}) {
        double ok = 0.0;
        double binom = 1.0;
        for (int t = 0; t <= 3; ++t) {
            ok += binom * std::pow(fu, t) * std::pow(1 - fu, 23 - t);
            binom = binom * (23 - t) / (t + 1);
        }
        CHECK(golay_table_rates(fu, 0.0).fbar_u == Catch::Approx(0.5 * (1 - ok)).margin(1e-12));
    }

    // Everything erased: guessing among 4096 codewords, 2048 of odd parity,
    // minus the exact-hit term.
    CHECK(golay_table_rates(0.0, 1.0).fbar_u == Catch::Approx(0.5 * 4095.0 / 4096.0));
}

TEST_CASE("Golay polynomial stays in range") {
    for (double fu = 0.0; fu <= 0.2001; fu += 0.01) {
        for (double fn = 0.0; fn <= 0.2001; fn += 0.01) {
            double v = golay_table_rates(fu, fn).fbar_u;
            CAPTURE(fu, fn);
            CHECK(v >= 0.0);
            CHECK(v <= 0.5);
        }
    }
}

TEST_CASE("unencoded rates") {
    CodeRates r = unencoded_rates(0.01, 0.05);
    CHECK(r.fbar_u == 0.01);
    CHECK(r.p_succ == Catch::Approx(0.95));
}

TEST_CASE("code spec parsing") {
    CHECK(CodeSpec::parse("none").n == 1);
    CHECK(CodeSpec::parse("golay").n == 23);
    CodeSpec s = CodeSpec::parse("steane:4");
    CHECK(s.n == 7);
    CHECK(s.n_max == 4);
    CHECK(s.rates(0.01, 0.02).fbar_u ==
          Catch::Approx(steane_table_rates(0.01, 0.02, 4).fbar_u));
    CHECK_THROWS_AS(CodeSpec::parse("steane:9"), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::parse("steane:x"), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec::parse("surface"), std::invalid_argument);
}
