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

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "qlrc/error.h"

namespace qlrc {

namespace {

[[noreturn]] void parse_error(size_t line, const std::string &msg) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_uint(const std::string &s, size_t line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
        parse_error(line, "expected a non-negative integer, got '" + s + "'");
    }
    return std::stoull(s);
}

// Parses `key=value` tokens; every key in `keys` must appear exactly once.
std::map<std::string, std::uint64_t> parse_fields(const std::string &text, const std::vector<std::string> &keys,
                                                  size_t line) {
    std::istringstream in(text);
    std::map<std::string, std::uint64_t> out;
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            parse_error(line, "expected key=value, got '" + tok + "'");
        }
        std::string key = tok.substr(0, eq);
        if (std::find(keys.begin(), keys.end(), key) == keys.end() || out.count(key)) {
            parse_error(line, "unexpected or repeated key '" + key + "'");
        }
        out[key] = parse_uint(tok.substr(eq + 1), line);
    }
    if (out.size() != keys.size()) {
        parse_error(line, "missing keys in '" + text + "'");
    }
    return out;
}

FieldPtr field_from_header(const std::map<std::string, std::uint64_t> &h, size_t line) {
    std::uint64_t p = h.at("p"), m = h.at("m"), q = h.at("q"), poly = h.at("poly");
    if (p < 2 || m < 1 || p > 0xffffffffu || m > 64) {
        parse_error(line, "bad field header");
    }
    std::uint64_t power = capped_power(p, m, kMaxFieldSize);
    if (power != q) {
        parse_error(line, "q must equal p^m");
    }
    std::vector<std::uint32_t> coeffs;
    for (std::uint64_t i = 0; i <= m; i++) {
        coeffs.push_back(static_cast<std::uint32_t>(poly % p));
        poly /= p;
    }
    if (poly != 0) {
        parse_error(line, "poly has degree above m");
    }
    FieldPtr def = Field::of_order(q);
    if (def->p() == p && def->irreducible() == coeffs) {
        return def;
    }
    return Field::create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), coeffs);
}

std::string format_rows(const LinearCode &c) {
    std::ostringstream out;
    out << "n=" << c.n() << " k=" << c.k() << "\n";
    const Matrix &g = c.generator();
    for (size_t r = 0; r < g.rows(); r++) {
        for (size_t j = 0; j < g.cols(); j++) {
            out << (j ? " " : "") << g.at(r, j);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace

CodeFile parse_code_file(const std::string &text) {
    std::istringstream in(text);
    std::string raw;
    std::vector<std::pair<size_t, std::string>> lines;
    for (size_t no = 1; std::getline(in, raw); no++) {
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.resize(hash);
        }
        if (raw.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        lines.emplace_back(no, raw);
    }
    if (lines.empty()) {
        fail(ErrorCode::ParseError, "empty code file");
    }
    size_t at = 0;
    FieldPtr field = field_from_header(parse_fields(lines[at].second, {"q", "p", "m", "poly"}, lines[at].first),
                                       lines[at].first);
    at++;
    bool symplectic = false;
    size_t positions = 0;
    if (at < lines.size() && lines[at].second.find("layout=") != std::string::npos) {
        std::istringstream ls(lines[at].second);
        std::string layout, npos;
        ls >> layout >> npos;
        if (layout != "layout=symplectic" || npos.rfind("n=", 0) != 0) {
            parse_error(lines[at].first, "expected 'layout=symplectic n=<positions>'");
        }
        positions = parse_uint(npos.substr(2), lines[at].first);
        symplectic = true;
        at++;
    }
    if (at >= lines.size()) {
        fail(ErrorCode::ParseError, "missing 'n= k=' line");
    }
    auto dims = parse_fields(lines[at].second, {"n", "k"}, lines[at].first);
    size_t n = dims["n"], k = dims["k"];
    if (symplectic && n != 2 * positions) {
        parse_error(lines[at].first, "symplectic files need n = 2 * positions");
    }
    at++;
    if (lines.size() - at != k) {
        fail(ErrorCode::ParseError, "expected " + std::to_string(k) + " generator rows, found " +
                                        std::to_string(lines.size() - at));
    }
    Matrix g(field, 0, n);
    for (; at < lines.size(); at++) {
        std::istringstream ls(lines[at].second);
        Vec row;
        std::string tok;
        while (ls >> tok) {
            std::uint64_t v = parse_uint(tok, lines[at].first);
            if (v >= field->q()) {
                parse_error(lines[at].first, "entry " + tok + " outside the field");
            }
            row.push_back(static_cast<Elem>(v));
        }
        if (row.size() != n) {
            parse_error(lines[at].first, "row has " + std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(n));
        }
        g.append_row(row);
    }
    return {LinearCode(g), symplectic};
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::IoError, "cannot open '" + path + "'");
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content) || !out.flush()) {
        fail(ErrorCode::IoError, "cannot write '" + path + "'");
    }
}

CodeFile read_code_file(const std::string &path) {
    return parse_code_file(read_text_file(path));
}

std::string format_code_file(const LinearCode &c) {
    return c.f().header() + "\n" + format_rows(c);
}

std::string format_code_file(const SymplecticCode &c) {
    return c.f().header() + "\nlayout=symplectic n=" + std::to_string(c.n()) + "\n" + format_rows(c.as_linear());
}

nlohmann::json certificate_to_json(const LocalityCertificate &cert) {
    nlohmann::json sets = nlohmann::json::object();
    for (const auto &[i, j] : cert.sets) {
        sets[std::to_string(i)] = j.members();
    }
    return {{"r", cert.r}, {"delta", cert.delta}, {"sets", sets}};
}

LocalityCertificate certificate_from_json(const nlohmann::json &j, size_t n) {
    LocalityCertificate cert;
    cert.n = n;
    try {
        cert.r = j.at("r").get<size_t>();
        cert.delta = j.at("delta").get<size_t>();
        for (const auto &[key, members] : j.at("sets").items()) {
            size_t i = std::stoul(key);
            cert.sets.emplace(i, IndexSet(n, members.get<std::vector<size_t>>()));
        }
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
    } catch (const std::logic_error &e) {
        fail(ErrorCode::ParseError, std::string("malformed certificate key: ") + e.what());
    }
    return cert;
}

nlohmann::json bound_to_json(const BoundReport &b) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto &[k, v] : b.inputs) {
        inputs[k] = v;
    }
    return {{"name", b.name}, {"lhs", b.lhs},       {"rhs", b.rhs},      {"rhs_exact", b.rhs_exact},
            {"holds", b.holds()}, {"attained", b.attained}, {"inputs", inputs}};
}

nlohmann::json verdict_to_json(const std::string &form, size_t r, size_t delta, const LocalityResult &res,
                               const std::vector<BoundReport> &bounds) {
    nlohmann::json bj = nlohmann::json::array();
    for (const auto &b : bounds) {
        bj.push_back(bound_to_json(b));
    }
    return {{"schema", 1},
            {"form", form},
            {"r", r},
            {"delta", delta},
            {"verdict", verdict_name(res.verdict)},
            {"certificate", certificate_to_json(res.certificate)},
            {"bounds", bj},
            {"unresolved", res.unresolved},
            {"evaluations", res.evaluations},
            {"notes", res.notes}};
}

}  // namespace qlrc
