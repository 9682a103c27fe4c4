// Copyright 2026 The qlrc Authors
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

#include "qlrc/io.h"

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>

#include "qlrc/constructions.h"
#include "qlrc/error.h"
#include "test_util.h"

using namespace qlrc;
using namespace qlrc::testing;

TEST(Io, RoundTripIsByteIdentical) {
    Rng rng(81);
    for (int t = 0; t < 100; t++) {
        auto f = Field::of_order(std::vector<std::uint64_t>{2, 3, 4, 8, 9}[rng() % 5]);
        size_t n = 1 + rng() % 6;
        auto c = random_code(f, n, n, rng);
        std::string text = format_code_file(c);
        auto parsed = parse_code_file(text);
        EXPECT_FALSE(parsed.symplectic);
        EXPECT_EQ(parsed.code, c);
        EXPECT_EQ(format_code_file(parsed.code), text);
    }
    auto s = steane_symplectic();
    std::string text = format_code_file(s);
    auto parsed = parse_code_file(text);
    EXPECT_TRUE(parsed.symplectic);
    EXPECT_EQ(parsed.as_symplectic(), s);
    EXPECT_EQ(format_code_file(parsed.as_symplectic()), text);
}

TEST(Io, ParsesCommentsAndBlankLines) {
    auto parsed = parse_code_file(
        "# repetition code\n"
        "q=3 p=3 m=1 poly=4   # x + 1\n"
        "\n"
        "n=3 k=1\n"
        "  2 2 2\n");
    EXPECT_EQ(parsed.code.n(), 3u);
    EXPECT_EQ(parsed.code.k(), 1u);
    // Stored canonically: the leading entry is scaled to 1.
    EXPECT_EQ(format_code_file(parsed.code), "q=3 p=3 m=1 poly=4\nn=3 k=1\n1 1 1\n");
}

TEST(Io, CustomPolynomialIsHonoured) {
    auto parsed = parse_code_file("q=8 p=2 m=3 poly=13\nn=2 k=1\n1 2\n");
    const Field &f = parsed.code.f();
    EXPECT_EQ(f.poly_code(), 13u);
    EXPECT_FALSE(f.same_as(*Field::of_order(8)));
    // x is a root of x^3 + x^2 + 1: x^3 = x^2 + 1, encoded 4 + 1.
    EXPECT_EQ(f.pow(2, 3), 5u);
    EXPECT_EQ(Field::of_order(8)->poly_code(), 11u);
    EXPECT_EQ(format_code_file(parsed.code), "q=8 p=2 m=3 poly=13\nn=2 k=1\n1 2\n");
}

TEST(Io, MalformedInputIsAParseError) {
    const std::vector<std::string> bad = {
        "",
        "# only a comment\n",
        "q=4 p=2 m=2\nn=1 k=0\n",
        "q=4 p=2 m=2 poly=7 extra=1\nn=1 k=0\n",
        "q=6 p=2 m=2 poly=7\nn=1 k=0\n",
        "q=4 p=2 m=2 poly=15\nn=1 k=0\n",
        "q=4 p=2 m=2 poly=5\nn=1 k=0\n",
        "q=4 p=2 m=2 poly=7\n",
        "q=4 p=2 m=2 poly=7\nn=2 k=2\n1 0\n",
        "q=4 p=2 m=2 poly=7\nn=2 k=1\n1 0 0\n",
        "q=4 p=2 m=2 poly=7\nn=2 k=1\n1 4\n",
        "q=4 p=2 m=2 poly=7\nn=2 k=1\n1 -1\n",
        "q=4 p=2 m=2 poly=7\nn=2 k=1\n1 x\n",
        "q=2 p=2 m=1 poly=3\nlayout=symplectic n=2\nn=3 k=0\n",
        "q=2 p=2 m=1 poly=3\nlayout=weird n=2\nn=4 k=0\n",
        "q=2 p=2 m=1 poly=3\nn=2 n=2\n",
    };
    for (const auto &text : bad) {
        auto code = error_of([&] { parse_code_file(text); });
        // poly=5 is x^2 + 1 = (x + 1)^2, so the field constructor rejects it.
        if (text.find("poly=5") != std::string::npos) {
            EXPECT_EQ(code, ErrorCode::ReduciblePolynomial) << text;
        } else {
            EXPECT_EQ(code, ErrorCode::ParseError) << text;
        }
    }
}

TEST(Io, FileHelpers) {
    auto dir = std::filesystem::temp_directory_path() / ("qlrc_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto path = (dir / "hamming.code").string();
    auto h = hamming_code(3, 2);
    write_text_file(path, format_code_file(h));
    auto back = read_code_file(path);
    EXPECT_EQ(back.code, h);
    EXPECT_EQ(read_text_file(path), format_code_file(h));
    EXPECT_EQ(error_of([&] { read_text_file((dir / "missing").string()); }), ErrorCode::IoError);
    EXPECT_EQ(error_of([&] { write_text_file((dir / "no" / "such" / "dir").string(), "x"); }), ErrorCode::IoError);
    std::filesystem::remove_all(dir);
}

TEST(Io, CertificateJsonRoundTrip) {
    auto h = hamming_code(3, 2);
    auto res = verify_rdelta_lrc(h, 3, 2);
    ASSERT_EQ(res.verdict, Verdict::Certified);
    auto j = certificate_to_json(res.certificate);
    EXPECT_EQ(j.at("r"), 3);
    EXPECT_EQ(j.at("delta"), 2);
    EXPECT_EQ(j.at("sets").size(), 7u);
    // Labels are 1-based both as keys and as members.
    EXPECT_TRUE(j.at("sets").contains("1"));
    EXPECT_FALSE(j.at("sets").contains("0"));
    auto back = certificate_from_json(nlohmann::json::parse(j.dump()), 7);
    EXPECT_EQ(back.r, 3u);
    EXPECT_EQ(back.delta, 2u);
    EXPECT_EQ(back.sets, res.certificate.sets);
    EXPECT_EQ(verify_rdelta_lrc(h, 3, 2, back).verdict, Verdict::Certified);

    for (const char *bad : {R"({"r":3,"delta":2})", R"({"r":"x","delta":2,"sets":{}})",
                            R"({"r":3,"delta":2,"sets":{"a":[1,2]}})", R"({"r":3,"delta":2,"sets":{"1":[1,9]}})",
                            R"({"r":3,"delta":2,"sets":{"1":"oops"}})"}) {
        auto code = error_of([&] { certificate_from_json(nlohmann::json::parse(bad), 7); });
        EXPECT_TRUE(code == ErrorCode::ParseError || code == ErrorCode::IndexOutOfRange) << bad;
    }
}

TEST(Io, VerdictJsonSchema) {
    auto h = hamming_code(3, 2);
    auto res = verify_rdelta_lrc(h, 2, 2);
    ASSERT_EQ(res.verdict, Verdict::Refuted);
    auto bound = classical_singleton(7, 4, 3, 2, 2);
    auto j = verdict_to_json("classical", 2, 2, res, {bound});
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("form"), "classical");
    EXPECT_EQ(j.at("verdict"), "Refuted");
    EXPECT_EQ(j.at("r"), 2);
    EXPECT_EQ(j.at("delta"), 2);
    EXPECT_FALSE(j.at("unresolved").empty());
    EXPECT_EQ(j.at("evaluations"), res.evaluations);
    ASSERT_EQ(j.at("bounds").size(), 1u);
    const auto &b = j.at("bounds")[0];
    EXPECT_EQ(b.at("name"), bound.name);
    EXPECT_EQ(b.at("lhs"), bound.lhs);
    EXPECT_EQ(b.at("rhs"), bound.rhs);
    EXPECT_EQ(b.at("holds"), bound.holds());
    EXPECT_EQ(b.at("attained"), bound.attained);
    EXPECT_TRUE(b.at("inputs").contains("n"));
    for (const char *key : {"certificate", "notes"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}
