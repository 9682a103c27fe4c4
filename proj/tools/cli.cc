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

#include "cli.h"

#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qlrc/error.h"
#include "qlrc/io.h"
#include "qlrc/locality.h"
#include "qlrc/qlocality.h"

namespace qlrc::cli {

namespace {

[[noreturn]] void bad_descriptor(const std::string &msg) {
    fail(ErrorCode::ParseError, "descriptor: " + msg);
}

std::uint64_t to_uint(const std::string &s, const std::string &what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
        bad_descriptor("expected an integer for " + what + ", got '" + s + "'");
    }
    return std::stoull(s);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    return out;
}

// `a=1,b=2` -> {a:1, b:2}, requiring exactly the listed keys.
std::map<std::string, std::uint64_t> key_values(const std::string &body, const std::vector<std::string> &keys) {
    std::map<std::string, std::uint64_t> kv;
    for (const auto &part : split(body, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) {
            bad_descriptor("expected key=value, got '" + part + "'");
        }
        std::string key = part.substr(0, eq);
        if (std::find(keys.begin(), keys.end(), key) == keys.end() || kv.count(key)) {
            bad_descriptor("unexpected or repeated key '" + key + "'");
        }
        kv[key] = to_uint(part.substr(eq + 1), key);
    }
    for (const auto &k : keys) {
        if (!kv.count(k)) {
            bad_descriptor("missing key '" + k + "'");
        }
    }
    return kv;
}

std::string strip_at(const std::string &s) {
    if (s.size() < 2 || s[0] != '@') {
        bad_descriptor("expected @file, got '" + s + "'");
    }
    return s.substr(1);
}

std::string tuple_string(const std::vector<size_t> &v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

std::optional<size_t> measured_distance(const LinearCode &c, std::uint64_t budget) {
    if (c.is_zero()) {
        return std::nullopt;
    }
    try {
        return min_distance(c, DistanceStrategy::automatic, budget).d;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::BudgetExceeded) {
            throw;
        }
        return std::nullopt;
    }
}

std::string classical_string(const LinearCode &c, std::uint64_t budget) {
    auto d = measured_distance(c, budget);
    return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," + (d ? std::to_string(*d) : "?") + "]_" +
           std::to_string(c.f().q());
}

void report_dual_containing(const LinearCode &c, Form form, std::uint64_t budget, std::vector<std::string> &rep) {
    LinearCode dual = form == Form::hermitian ? dual_hermitian(c) : dual_euclidean(c);
    bool dc = is_subcode(dual, c);
    rep.push_back(std::string("dual-containing (") + form_name(form) + "): " + (dc ? "yes" : "no"));
    if (dc) {
        auto p = derived_quantum_params(c, form, budget);
        rep.push_back("quantum Q'(C): " + p.to_string() + (p.pure ? " pure" : " non-pure"));
    }
}

Constructed construct_affine(const std::string &body, std::uint64_t budget) {
    auto at = body.find(",delta=");
    if (at == std::string::npos) {
        bad_descriptor("affine needs delta=...");
    }
    auto kv = key_values(body.substr(0, at), {"q", "n1", "n2"});
    std::string dspec = body.substr(at + 7);
    FieldPtr f = Field::of_order(kv["q"]);
    GridSpec grid = GridSpec::create(f, kv["n1"], kv["n2"]);
    auto colon = dspec.find(':');
    if (colon == std::string::npos) {
        bad_descriptor("delta needs kind:params");
    }
    std::string kind = dspec.substr(0, colon);
    std::string params = dspec.substr(colon + 1);
    Constructed out;
    DeltaSet delta;
    std::string claims_note;
    if (kind == "custom") {
        std::istringstream in(read_text_file(strip_at(params)));
        std::vector<std::pair<size_t, size_t>> exps;
        size_t a, b;
        while (in >> a >> b) {
            exps.emplace_back(a, b);
        }
        delta = custom_delta(grid.n1, grid.n2, exps, false);
    } else {
        std::map<std::string, DeltaKind> kinds = {
            {"rect", DeltaKind::rect}, {"step2", DeltaKind::step2}, {"step2s", DeltaKind::step2_sigma}};
        if (!kinds.count(kind)) {
            bad_descriptor("unknown delta kind '" + kind + "'");
        }
        auto ps = split(params, ',');
        if (ps.size() != 2) {
            bad_descriptor("delta " + kind + " needs two parameters");
        }
        size_t a = to_uint(ps[0], kind), b = to_uint(ps[1], kind);
        try {
            delta = delta_family_with_claims(kinds[kind], a, b, grid);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::ConstraintViolated) {
                throw;
            }
            delta = delta_family(kinds[kind], a, b, grid.n1, grid.n2);
            claims_note = e.what();
        }
    }
    LinearCode c = affine_variety_code(grid, delta);
    out.report.push_back("construct: affine " + delta.tag() + " over GF(" + std::to_string(f->q()) + "), grid " +
                         std::to_string(grid.n1) + "x" + std::to_string(grid.n2));
    out.report.push_back("classical: " + classical_string(c, budget));
    if (c.k() < delta.exponents.size()) {
        out.report.push_back("warning: " + std::string(error_code_name(ErrorCode::DependentMonomials)) + ": |delta| = " +
                             std::to_string(delta.exponents.size()) + " but dimension " + std::to_string(c.k()));
    }
    report_dual_containing(c, Form::euclidean, budget, out.report);
    if (delta.claims) {
        const auto &cl = *delta.claims;
        out.report.push_back("claimed: (r,delta)=(" + std::to_string(cl.r) + "," + std::to_string(cl.delta) + ") [[" +
                             std::to_string(cl.n) + "," + std::to_string(cl.k) + "," + std::to_string(cl.d) + "]]_" +
                             std::to_string(f->q()));
    } else if (!claims_note.empty()) {
        out.report.push_back("claimed: none (" + claims_note + ")");
    }
    out.linear = c;
    return out;
}

Constructed construct_grs(const std::string &body, bool hermitian_dc, std::uint64_t seed, std::uint64_t budget) {
    auto kv = key_values(body, {"q2", "n", "k"});
    Constructed out;
    if (hermitian_dc) {
        auto hit = search_hermitian_dual_containing_grs(static_cast<std::uint32_t>(kv["q2"]), kv["n"], kv["k"], seed);
        std::vector<size_t> mult(hit.spec.multipliers.begin(), hit.spec.multipliers.end());
        out.report.push_back("construct: GRS search over GF(" + std::to_string(kv["q2"]) + "), seed " +
                             std::to_string(seed) + ", " + std::to_string(hit.tried) + " tuple(s) tried, multipliers " +
                             tuple_string(mult) + (hit.spec.infinity ? " (with infinity)" : ""));
        out.report.push_back("classical: " + classical_string(hit.code, budget));
        report_dual_containing(hit.code, Form::hermitian, budget, out.report);
        out.report.push_back("claimed: MDS [" + std::to_string(kv["n"]) + "," + std::to_string(kv["k"]) + "," +
                             std::to_string(kv["n"] - kv["k"] + 1) + "], (r,delta)=(" + std::to_string(kv["k"]) +
                             "," + std::to_string(kv["n"] - kv["k"] + 1) + ")");
        out.linear = hit.code;
        return out;
    }
    GrsSpec spec;
    spec.field = Field::of_order(kv["q2"]);
    spec.k = kv["k"];
    size_t n = kv["n"];
    if (n > spec.field->q() + 1u) {
        bad_descriptor("GRS length exceeds q + 1");
    }
    spec.infinity = n == spec.field->q() + 1u;
    for (Elem x = 0; spec.n() < n; x++) {
        spec.points.push_back(x);
    }
    spec.multipliers.assign(n, 1);
    LinearCode c = grs_code(spec);
    out.report.push_back("construct: GRS over GF(" + std::to_string(spec.field->q()) + "), unit multipliers");
    out.report.push_back("classical: " + classical_string(c, budget));
    out.linear = c;
    return out;
}

QuantumCodeParams params_for(const QuantumCarrier &q, const LinearCode *source, Form form, std::uint64_t budget) {
    switch (q.form()) {
        case QuantumForm::symplectic: return quantum_params(q.symplectic_code(), budget);
        case QuantumForm::css: return css_params(q.c1(), q.c2(), budget);
        default: return derived_quantum_params(*source, form, budget);
    }
}

struct VerifyArgs {
    std::string code_path;
    std::string mode = "classical";
    std::string form;
    size_t r = 0;
    size_t delta = 0;
    std::uint64_t budget = kDefaultBudget;
    size_t threads = 0;
    std::uint64_t seed = 0;
    std::string json_path;
    std::string cert_path;
    std::string c2_path;
    bool direct = false;
};

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Certified: return kCertified;
        case Verdict::Refuted: return kRefuted;
        case Verdict::Inconclusive: return kInconclusive;
    }
    return kUsage;
}

void print_bound(std::ostream &out, const BoundReport &b) {
    out << "bound " << b.name << ": lhs=" << b.lhs << " rhs=" << b.rhs;
    if (b.rhs_exact != std::to_string(b.rhs)) {
        out << " (exact " << b.rhs_exact << ")";
    }
    out << (b.holds() ? " holds" : " VIOLATED") << (b.attained ? ", attained" : ", not attained") << "\n";
}

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    CodeFile file = read_code_file(a.code_path);
    SearchOptions opts{a.budget, a.threads};
    std::optional<LocalityCertificate> cert;
    size_t n = file.symplectic ? file.code.n() / 2 : file.code.n();
    if (!a.cert_path.empty()) {
        try {
            cert = certificate_from_json(nlohmann::json::parse(read_text_file(a.cert_path)), n);
        } catch (const nlohmann::json::exception &e) {
            fail(ErrorCode::ParseError, std::string("certificate: ") + e.what());
        }
    }
    std::vector<BoundReport> bounds;
    std::vector<std::string> extra;
    nlohmann::json extra_json = nlohmann::json::object();
    LocalityResult res;
    std::string form = a.form;
    std::string optimality;

    if (a.mode == "classical") {
        if (file.symplectic) {
            fail(ErrorCode::FormMismatch, "classical mode needs a linear code file");
        }
        const LinearCode &c = file.code;
        form = form.empty() ? "classical" : form;
        res = verify_rdelta_lrc(c, a.r, a.delta, cert, opts);
        auto d = measured_distance(c, a.budget);
        out << "code: " << classical_string(c, a.budget) << "\n";
        extra_json["code"] = {{"n", c.n()}, {"k", c.k()}, {"q", c.f().q()}};
        if (d) {
            extra_json["code"]["d"] = *d;
            bounds.push_back(classical_singleton(c.n(), c.k(), *d, a.r, a.delta));
            optimality = res.verdict == Verdict::Certified && bounds.back().attained ? "optimal" : "not optimal";
        } else {
            optimality = "undetermined (distance over budget)";
        }
    } else if (a.mode == "quantum") {
        if (form.empty()) {
            form = file.symplectic ? "symplectic" : "euclidean";
        }
        std::optional<QuantumCarrier> carrier;
        Form lin_form = Form::euclidean;
        std::string route = "direct";
        if (form == "symplectic") {
            carrier = QuantumCarrier::symplectic(file.as_symplectic());
        } else if (file.symplectic) {
            fail(ErrorCode::FormMismatch, "form " + form + " needs a linear code file");
        } else if (form == "css") {
            LinearCode c2 = a.c2_path.empty() ? file.code : read_code_file(a.c2_path).code;
            carrier = QuantumCarrier::css(file.code, c2);
        } else if (form == "euclidean" || form == "hermitian") {
            lin_form = form == "hermitian" ? Form::hermitian : Form::euclidean;
            carrier = QuantumCarrier::derived(file.code, lin_form);
        } else {
            fail(ErrorCode::BadParameters, "unknown form '" + form + "'");
        }
        bool derived = form == "euclidean" || form == "hermitian";
        bool done = false;
        if (derived && !a.direct) {
            try {
                res = bridge_classical_quantum(file.code, lin_form, a.r, a.delta, cert, opts);
                route = "bridge (classical verifier on C)";
                done = true;
            } catch (const Error &e) {
                if (e.code() != ErrorCode::HypothesisNotMet) {
                    throw;
                }
                extra.push_back(std::string("bridge not applicable: ") + e.what());
            }
        }
        if (!done) {
            res = verify_quantum_rdelta_lrc(*carrier, a.r, a.delta, cert, opts);
        }
        QuantumCodeParams p = params_for(*carrier, &file.code, lin_form, a.budget);
        out << "code: " << p.to_string() << " (" << quantum_form_name(carrier->form()) << ")\n";
        out << "route: " << route << "\n";
        out << "purity: " << (p.pure ? "pure" : "non-pure") << "\n";
        extra_json["route"] = route;
        extra_json["quantum"] = {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"d_exact", p.d_exact},
                                 {"pure", p.pure}, {"q", p.q}, {"params", p.to_string()}};
        if (derived) {
            PurityReport pr = purity_check(file.code, lin_form, a.budget);
            extra_json["purity"] = {{"pure", pr.pure}, {"d_code", pr.d_code}};
            if (pr.d_dual) {
                extra_json["purity"]["d_dual"] = *pr.d_dual;
            }
        }
        auto n64 = static_cast<std::int64_t>(p.n);
        auto d64 = static_cast<std::int64_t>(p.d);
        bool singleton_attained = false;
        if ((n64 + p.k) % 2 == 0) {
            bounds.push_back(quantum_singleton(n64, p.k, d64, a.r, a.delta));
            singleton_attained = bounds.back().attained;
        } else {
            extra.push_back("quantum-singleton not evaluated: n + k is odd");
        }
        // The r-LRC bound concerns single-erasure locality only.
        if (a.delta == 2) {
            bounds.push_back(quantum_r_lrc_bound(n64, p.k, d64, a.r));
        } else {
            extra.push_back("quantum-r-lrc not evaluated: it applies to delta = 2");
        }
        if (!p.pure) {
            optimality = "undefined (non-pure)";
        } else if (res.verdict == Verdict::Certified && singleton_attained) {
            optimality = "optimal pure";
        } else {
            optimality = "not optimal";
        }
    } else {
        fail(ErrorCode::BadParameters, "unknown mode '" + a.mode + "'");
    }

    out << "mode: " << a.mode << "  form: " << form << "  r=" << a.r << " delta=" << a.delta << "\n";
    out << "verdict: " << verdict_name(res.verdict) << "  (" << res.evaluations << " candidate sets evaluated)\n";
    for (const auto &b : bounds) {
        print_bound(out, b);
    }
    out << "optimality: " << optimality << "\n";
    if (res.verdict != Verdict::Certified && !bounds.empty()) {
        extra.push_back("bounds constrain certified LRCs only; they are shown for reference");
    }
    for (const auto &note : extra) {
        out << "note: " << note << "\n";
    }
    for (const auto &note : res.notes) {
        out << "note: " << note << "\n";
    }
    if (!res.unresolved.empty()) {
        out << "unresolved:";
        for (auto i : res.unresolved) {
            out << " " << i;
        }
        out << "\n";
    }
    out << "certificate:\n";
    for (const auto &[i, j] : res.certificate.sets) {
        out << "  " << i << ": " << j.to_string() << "\n";
    }
    if (!a.json_path.empty()) {
        nlohmann::json j = verdict_to_json(form, a.r, a.delta, res, bounds);
        j["mode"] = a.mode;
        j["optimality"] = optimality;
        for (auto &[k, v] : extra_json.items()) {
            j[k] = v;
        }
        write_text_file(a.json_path, j.dump(2) + "\n");
    }
    return exit_for(res.verdict);
}

}  // namespace

Constructed construct(const std::string &descriptor, bool hermitian_dc, std::uint64_t seed, std::uint64_t budget) {
    auto colon = descriptor.find(':');
    std::string head = descriptor.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
    if (head == "affine") {
        return construct_affine(body, budget);
    }
    if (head == "grs") {
        return construct_grs(body, hermitian_dc, seed, budget);
    }
    if (head == "hamming") {
        auto kv = key_values(body, {"m", "q"});
        Constructed out;
        out.linear = hamming_code(kv["m"], static_cast<std::uint32_t>(kv["q"]));
        out.report.push_back("construct: Hamming code, redundancy " + std::to_string(kv["m"]));
        out.report.push_back("classical: " + classical_string(*out.linear, budget));
        return out;
    }
    if (head == "steane" && colon == std::string::npos) {
        Constructed out;
        out.symplectic = steane_symplectic();
        out.report.push_back("construct: Steane stabilizer (symplectic, dim " +
                             std::to_string(out.symplectic->dim()) + ")");
        out.report.push_back("quantum: " + quantum_params(*out.symplectic, budget).to_string());
        return out;
    }
    if (head == "css") {
        auto files = split(body, ',');
        if (files.size() != 2) {
            bad_descriptor("css needs @file1,@file2");
        }
        LinearCode c1 = read_code_file(strip_at(files[0])).code;
        LinearCode c2 = read_code_file(strip_at(files[1])).code;
        CssPair pair = css_pair(c1, c2, budget);
        Constructed out;
        out.symplectic = pair.stabilizer;
        out.report.push_back("construct: CSS stabilizer C2^perp x C1^perp");
        out.report.push_back("quantum: " + pair.params.to_string() + (pair.params.pure ? " pure" : " non-pure"));
        return out;
    }
    bad_descriptor("unknown construction '" + descriptor + "'");
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qlrc: locally recoverable classical and quantum codes"};
    app.require_subcommand(1);
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    std::string json_path;

    auto *construct_cmd = app.add_subcommand("construct", "Build a code and write its code file");
    std::string descriptor, out_path;
    bool hermitian_dc = false;
    construct_cmd->add_option("descriptor", descriptor, "affine:..., grs:..., hamming:..., steane, css:...")
        ->required();
    construct_cmd->add_option("-o,--out", out_path, "Code file to write (default: print to stdout)");
    construct_cmd->add_flag("--hermitian-dc", hermitian_dc, "Search GRS multipliers for a Hermitian dual-containing code");
    construct_cmd->add_option("--seed", seed, "Start offset of randomized searches");
    construct_cmd->add_option("--budget", budget, "Enumeration budget");

    VerifyArgs va;
    auto *verify_cmd = app.add_subcommand("verify", "Decide (r,delta) local recoverability");
    verify_cmd->add_option("code", va.code_path, "Code file")->required();
    verify_cmd->add_option("--mode", va.mode, "classical or quantum")->check(CLI::IsMember({"classical", "quantum"}));
    verify_cmd->add_option("--form", va.form, "symplectic, hermitian, euclidean or css")
        ->check(CLI::IsMember({"symplectic", "hermitian", "euclidean", "css"}));
    verify_cmd->add_option("-r", va.r, "Locality")->required();
    verify_cmd->add_option("-d,--delta", va.delta, "Local distance")->required();
    verify_cmd->add_option("--budget", va.budget, "Candidate-set budget");
    verify_cmd->add_option("--threads", va.threads, "Worker threads (0 = available parallelism)");
    verify_cmd->add_option("--seed", va.seed, "Accepted for uniformity; verification is deterministic");
    verify_cmd->add_option("--json", va.json_path, "Write the JSON verdict here");
    verify_cmd->add_option("--cert", va.cert_path, "Check this certificate instead of searching");
    verify_cmd->add_option("--c2", va.c2_path, "Second code of a CSS pair (default: the first)");
    verify_cmd->add_flag("--direct", va.direct, "Skip the classical bridge for dual-containing codes");

    auto *weights_cmd = app.add_subcommand("weights", "Generalized Hamming or symplectic weight hierarchy");
    std::string weights_path, kind = "ghw", weights_form = "euclidean";
    bool dual = false;
    size_t t_max = 0;
    weights_cmd->add_option("code", weights_path, "Code file")->required();
    weights_cmd->add_option("--kind", kind, "ghw or gsw")->check(CLI::IsMember({"ghw", "gsw"}));
    weights_cmd->add_flag("--dual", dual, "Use the dual code");
    weights_cmd->add_option("--form", weights_form, "Dual used by --dual for linear codes")
        ->check(CLI::IsMember({"euclidean", "hermitian"}));
    weights_cmd->add_option("--t-max", t_max, "Largest t (default: the dimension)");
    weights_cmd->add_option("--budget", budget, "Enumeration budget");
    weights_cmd->add_option("--json", json_path, "Write the hierarchy as JSON");

    auto *bounds_cmd = app.add_subcommand("bounds", "Evaluate the Singleton-like bounds");
    std::int64_t bn = 0, bk = 0, bd = 0, br = 0, bdelta = 2;
    std::string bkind = "all";
    bounds_cmd->add_option("-n", bn, "Length")->required();
    bounds_cmd->add_option("-k", bk, "Dimension (logical for quantum bounds)")->required();
    bounds_cmd->add_option("--dist", bd, "Minimum distance")->required();
    bounds_cmd->add_option("-r", br, "Locality")->required();
    bounds_cmd->add_option("-d,--delta", bdelta, "Local distance");
    bounds_cmd->add_option("--kind", bkind, "classical, quantum-singleton, quantum-r-lrc or all")
        ->check(CLI::IsMember({"classical", "quantum-singleton", "quantum-r-lrc", "all"}));
    bounds_cmd->add_option("--json", json_path, "Write the bound reports as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kCertified;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kCertified;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (construct_cmd->parsed()) {
            Constructed c = construct(descriptor, hermitian_dc, seed, budget);
            for (const auto &line : c.report) {
                out << line << "\n";
            }
            std::string text = c.linear ? format_code_file(*c.linear) : format_code_file(*c.symplectic);
            if (out_path.empty()) {
                out << text;
            } else {
                write_text_file(out_path, text);
                out << "wrote " << out_path << "\n";
            }
            return kCertified;
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(va, out);
        }
        if (weights_cmd->parsed()) {
            CodeFile file = read_code_file(weights_path);
            std::vector<size_t> h;
            if (kind == "gsw") {
                if (!file.symplectic) {
                    fail(ErrorCode::FormMismatch, "gsw needs a symplectic code file");
                }
                SymplecticCode c = file.as_symplectic();
                if (dual) {
                    c = dual_symplectic(c);
                }
                h = gsw_hierarchy(c, t_max ? t_max : c.dim(), budget);
            } else {
                LinearCode c = file.code;
                if (dual) {
                    c = weights_form == "hermitian" ? dual_hermitian(c) : dual_euclidean(c);
                }
                h = generalized_hamming_weights(c, t_max ? t_max : c.k(), budget);
            }
            out << kind << (dual ? " (dual)" : "") << ": " << tuple_string(h) << "\n";
            if (!json_path.empty()) {
                write_text_file(json_path, nlohmann::json{{"schema", 1}, {"kind", kind}, {"dual", dual},
                                                          {"hierarchy", h}}.dump(2) + "\n");
            }
            return kCertified;
        }
        if (bounds_cmd->parsed()) {
            std::vector<BoundReport> reports;
            std::vector<std::string> notes;
            if (bkind == "classical" || bkind == "all") {
                reports.push_back(classical_singleton(bn, bk, bd, br, bdelta));
            }
            if (bkind == "quantum-singleton" || bkind == "all") {
                try {
                    reports.push_back(quantum_singleton(bn, bk, bd, br, bdelta));
                } catch (const Error &e) {
                    if (bkind != "all" || e.code() != ErrorCode::ParityViolation) {
                        throw;
                    }
                    notes.push_back(std::string("quantum-singleton skipped: ") + e.what());
                }
            }
            if (bkind == "quantum-r-lrc" || bkind == "all") {
                reports.push_back(quantum_r_lrc_bound(bn, bk, bd, br));
            }
            bool all_attained = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto &b : reports) {
                print_bound(out, b);
                all_attained = all_attained && b.attained;
                arr.push_back(bound_to_json(b));
            }
            for (const auto &note : notes) {
                out << "note: " << note << "\n";
            }
            if (!json_path.empty()) {
                write_text_file(json_path, nlohmann::json{{"schema", 1}, {"bounds", arr}}.dump(2) + "\n");
            }
            return all_attained ? kCertified : kRefuted;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::BudgetExceeded ? kInconclusive : kUsage;
    }
    return kUsage;
}

}  // namespace qlrc::cli
