/*
   Copyright 2026 The chaincodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <memory>
#include <optional>

#include "chaincodes/code.hpp"
#include "chaincodes/detail/text_util.hpp"
#include "chaincodes/errors.hpp"
#include "chaincodes/pir.hpp"

namespace chaincodes::cli {

namespace {

using nlohmann::json;

struct Config {
    std::string ring;
    int64_t n = 1;
    std::string lambda = "1";
    std::string exponents;
    std::string word;
    std::string poly;
    std::string quotient;
    std::string output = "json";
    std::string strategy = "residue";
    std::string method = "crt";
    uint64_t budget = kDefaultBudget;
    bool no_wrap = false;
    bool enumerate = false;
};

json element_json(const RingElement& a) {
    if (a.ring()->width() == 1) return a.coeffs()[0];
    return std::vector<int64_t>(a.coeffs().begin(), a.coeffs().end());
}

json poly_json(const Poly& f) {
    json coeffs = json::array();
    for (const auto& c : f.coefficients()) coeffs.push_back(element_json(c));
    return {{"coeffs", coeffs}, {"degree", f.degree()}, {"text", f.to_string()}};
}

json one_based(const std::vector<int>& indices) {
    json out = json::array();
    for (int i : indices) out.push_back(i + 1);
    return out;
}

RingPtr chain_ring(const Config& c) { return ChainRing::make(ChainRingSpec::parse(c.ring)); }

int checked_n(int64_t n) {
    if (n < 1 || n > 100000) throw PreconditionError("n must lie in [1, 100000]");
    return static_cast<int>(n);
}

std::vector<int> parse_exponents(const std::string& text) {
    std::vector<int> out;
    for (int64_t v : text::parse_int_list(text)) out.push_back(static_cast<int>(v));
    return out;
}

Poly parse_word(const RingPtr& ring, const std::string& text, int n) {
    std::vector<RingElement> coeffs;
    for (const auto& part : text::split_top_level(text, ',')) coeffs.push_back(parse_element(ring, part));
    if (static_cast<int>(coeffs.size()) > n)
        throw PreconditionError("word has " + std::to_string(coeffs.size()) + " coordinates but n = " + std::to_string(n));
    return Poly(ring, coeffs);
}

WeightStrategy parse_strategy(const std::string& s) {
    if (s == "direct") return WeightStrategy::Direct;
    if (s == "residue") return WeightStrategy::Residue;
    throw ParseError("unknown strategy '" + s + "' (expected direct or residue)");
}

FactorizationPtr factorization(const Config& c) {
    auto R = chain_ring(c);
    checked_n(c.n);
    return std::make_shared<const Factorization>(factor_over_ring(parse_element(R, c.lambda), c.n));
}

ConstacyclicCode code_of(const Config& c) {
    return ConstacyclicCode::from_exponents(factorization(c), parse_exponents(c.exponents));
}

json instance_json(const Factorization& f) {
    return {{"ring", f.base()->spec().to_string()}, {"n", f.n()}, {"lambda", element_json(f.lambda())}};
}

json cmd_factor(const Config& c) {
    auto f = factorization(c);
    json out = instance_json(*f);
    const auto& part = f->partition();
    const auto& root = f->root();
    out["t"] = part.t;
    out["tn"] = part.tn;
    out["q"] = part.q;
    out["extension"] = root.extension->spec().to_string();
    out["extension_degree"] = root.degree;
    out["xi"] = element_json(root.xi);
    json cosets = json::array();
    for (const auto& cs : part.cosets) cosets.push_back(cs);
    out["cosets"] = cosets;
    json residues = json::array();
    for (const auto& g : f->residue_factors()) residues.push_back(poly_json(g));
    out["residue_factors"] = residues;
    json factors = json::array();
    for (int i = 0; i < f->m(); ++i)
        factors.push_back({{"index", i + 1}, {"degree", f->degree(i)}, {"coset", part.cosets[static_cast<size_t>(i)]},
                           {"poly", poly_json(f->factors()[static_cast<size_t>(i)])}});
    out["factors"] = factors;
    out["m"] = f->m();
    BigInt ideals = 1;
    for (int i = 0; i < f->m(); ++i) ideals *= f->base()->ell() + 1;
    out["ideal_count"] = ideals.str();
    out["verified"] = f->verify();
    return out;
}

json cmd_code_build(const Config& c) {
    auto code = code_of(c);
    json out = instance_json(code.factorization());
    out["exponents"] = code.exponents();
    out["ell"] = code.ell();
    out["cardinality"] = code.cardinality().str();
    out["log_q_size"] = code.log_size();
    out["is_zero_code"] = code.is_zero_code();
    out["is_whole_ring"] = code.is_whole_ring();
    auto tower = code.generator_tower();
    json levels = json::array();
    for (size_t v = 0; v < tower.polys.size(); ++v)
        levels.push_back({{"v", v}, {"index_set", one_based(tower.index_sets[v])}, {"poly", poly_json(tower.polys[v])}});
    out["tower"] = levels;
    out["generator"] = poly_json(code.reduced_generator().rep());
    out["canonical_generator"] = poly_json(code.canonical_generator().rep());
    json checks = json::array();
    auto ct = code.check_tower();
    for (size_t v = 0; v < ct.size(); ++v) checks.push_back({{"v", v}, {"poly", poly_json(ct[v])}});
    out["check_tower"] = checks;
    out["check"] = poly_json(code.check_polynomial().rep());
    out["annihilator_exponents"] = code.annihilator().exponents();
    out["residue_zero_set"] = code.residue_zero_set();
    out["bch_wrap"] = !c.no_wrap;
    out["bch_bound"] = code.is_zero_code() ? json(nullptr) : json(code.bch_bound(!c.no_wrap));
    return out;
}

json cmd_code_minweight(const Config& c) {
    auto code = code_of(c);
    json out = instance_json(code.factorization());
    out["exponents"] = code.exponents();
    out["strategy"] = c.strategy;
    out["budget"] = c.budget;
    out["min_weight"] = code.min_weight_exact(parse_strategy(c.strategy), c.budget);
    out["bch_bound"] = code.bch_bound(!c.no_wrap);
    out["bch_wrap"] = !c.no_wrap;
    return out;
}

json cmd_code_ideals(const Config& c) {
    auto f = factorization(c);
    auto range = enumerate_codes(f, c.budget);
    json out = instance_json(*f);
    out["count"] = std::to_string(range.size());
    json codes = json::array();
    if (c.enumerate) {
        for (const auto& code : range)
            codes.push_back({{"exponents", code.exponents()}, {"cardinality", code.cardinality().str()}, {"log_q_size", code.log_size()}});
        out["codes"] = codes;
    }
    return out;
}

json cmd_code_member(const Config& c) {
    auto code = code_of(c);
    const auto Q = code.ambient();
    if (c.word.empty() == c.poly.empty()) throw ParseError("give exactly one of --word or --poly");
    Poly f = c.word.empty() ? Poly::parse(Q.base(), c.poly) : parse_word(Q.base(), c.word, Q.n());
    auto element = Q.element(f);
    Membership method;
    if (c.method == "crt") method = Membership::Crt;
    else if (c.method == "check") method = Membership::Check;
    else throw ParseError("unknown method '" + c.method + "' (expected crt or check)");
    json out = instance_json(code.factorization());
    out["exponents"] = code.exponents();
    out["method"] = c.method;
    out["word"] = poly_json(element.rep());
    out["weight"] = element.weight();
    out["member"] = code.contains(element, method);
    return out;
}

json cmd_pir_check(const Config& c) {
    auto spec = PirSpec::parse(c.ring);
    auto report = is_principal_quotient(spec, c.n, parse_lambdas(spec.rings(), c.lambda));
    json comps = json::array();
    for (const auto& cert : report.components)
        comps.push_back({{"ring", cert.spec.to_string()},
                         {"ell", cert.ell},
                         {"characteristic", cert.characteristic},
                         {"gcd_n_char", cert.gcd_n_char},
                         {"criterion", cert.criterion},
                         {"lambda_order", cert.lambda_order}});
    return {{"ring", spec.to_string()},
            {"n", c.n},
            {"verdict", to_string(report.verdict)},
            {"principal", report.verdict == Verdict::Unknown ? json(nullptr) : json(report.verdict == Verdict::Principal)},
            {"lambda_order", report.lambda_order},
            {"exact", report.exact},
            {"components", comps},
            {"reason", report.reason}};
}

json cmd_pir_isometry(const Config& c) {
    auto spec = PirSpec::parse(c.ring);
    auto rings = spec.rings();
    const int n = checked_n(c.n);
    auto lambdas = parse_lambdas(rings, c.lambda);
    auto iso = make_isometry(lambdas, n);
    std::vector<std::string> words;
    if (!c.word.empty()) {
        words = text::split_top_level(c.word, ';');
        if (words.size() != rings.size()) throw ParseError("--word needs one ';'-separated word per component");
    }
    json comps = json::array();
    for (size_t i = 0; i < rings.size(); ++i) {
        json entry = {{"ring", rings[i]->spec().to_string()},
                      {"lambda", element_json(lambdas[i])},
                      {"scaling", element_json(iso.scalings[i])}};
        if (!words.empty()) {
            QuotientRing Q(lambdas[i], n);
            auto f = Q.element(parse_word(rings[i], words[i], n));
            auto g = iso.apply(f, i);
            entry["word"] = poly_json(f.rep());
            entry["image"] = poly_json(g.rep());
            entry["weight"] = f.weight();
            entry["image_weight"] = g.weight();
        }
        comps.push_back(entry);
    }
    return {{"ring", spec.to_string()}, {"n", n}, {"t", iso.t}, {"alpha", iso.alpha}, {"beta", iso.beta}, {"components", comps}};
}

json cmd_pir_verify_chain(const Config& c) {
    auto R = chain_ring(c);
    checked_n(c.n);
    auto lambda = parse_element(R, c.lambda);
    auto report = verify_chain_quotient(lambda, c.n);
    auto opt_poly = [](const std::optional<QuotientElement>& e) { return e ? poly_json(e->rep()) : json(nullptr); };
    return {{"ring", R->spec().to_string()},
            {"n", c.n},
            {"lambda", element_json(lambda)},
            {"pi", "X - " + lambda.to_string()},
            {"is_chain", report.is_chain},
            {"nilpotency", report.nilpotency ? json(*report.nilpotency) : json(nullptr)},
            {"pi_power_n", opt_poly(report.pi_power_n)},
            {"eisenstein_unit", opt_poly(report.eisenstein_unit)},
            {"residue_valuation", report.residue_valuation},
            {"reason", report.reason}};
}

json cmd_pir_lattice(const Config& c) {
    auto table = SmallRingTable::parse(c.quotient);
    auto lattice = brute_ideal_lattice(table);
    auto labels = [&](const std::vector<int>& idx) {
        json out = json::array();
        for (int i : idx) out.push_back(table.label(i));
        return out;
    };
    json ideals = json::array();
    for (const auto& I : lattice.ideals)
        ideals.push_back({{"size", I.elements.size()}, {"generators", labels(I.generators)}, {"principal", I.principal}});
    json witness = nullptr;
    if (lattice.witness) {
        const auto& I = lattice.ideals[*lattice.witness];
        witness = {{"size", I.elements.size()}, {"generators", labels(I.generators)}};
    }
    return {{"quotient", table.description()},
            {"size", table.size()},
            {"ideal_count", lattice.ideals.size()},
            {"principal", lattice.principal},
            {"chain", lattice.chain},
            {"local", lattice.local},
            {"witness", witness},
            {"ideals", ideals}};
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
}

bool is_flat(const json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive() || is_flat(x); });
}

// key: value lines, nested keys joined with '.', array entries numbered from 1.
void render_text(const json& v, const std::string& prefix, std::ostream& out) {
    if (v.is_object()) {
        if (v.contains("text") && v.contains("coeffs")) {
            out << prefix << ": " << v["text"].get<std::string>() << "\n";
            return;
        }
        for (const auto& [key, value] : v.items()) render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (is_flat(v)) {
        out << prefix << ": " << v.dump() << "\n";
    } else if (v.is_array()) {
        for (size_t i = 0; i < v.size(); ++i) render_text(v[i], prefix + "[" + std::to_string(i + 1) + "]", out);
    } else {
        out << prefix << ": " << scalar_text(v) << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Constacyclic codes over finite chain rings and PIRs", "chaincodes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--output", c.output, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto instance = [&](CLI::App* sub, bool with_lambda = true) {
        sub->add_option("--ring", c.ring, "Ring, e.g. GR(25,1) or FPS(4,2)")->required();
        sub->add_option("--n", c.n, "Code length")->required();
        if (with_lambda) sub->add_option("--lambda", c.lambda, "Unit lambda (default 1)");
    };

    auto* factor = app.add_subcommand("factor", "Factor X^n - lambda into basic irreducibles");
    instance(factor);

    auto* code = app.add_subcommand("code", "Constacyclic codes");
    code->require_subcommand(1);
    auto* build = code->add_subcommand("build", "Generator tower, check polynomial and bounds");
    instance(build);
    build->add_option("--exponents", c.exponents, "Exponents e_1,...,e_m")->required();
    build->add_flag("--no-wrap", c.no_wrap, "BCH runs may not wrap around modulo n");
    auto* minweight = code->add_subcommand("minweight", "Exact minimum Hamming weight");
    instance(minweight);
    minweight->add_option("--exponents", c.exponents, "Exponents e_1,...,e_m")->required();
    minweight->add_option("--strategy", c.strategy, "direct or residue")->check(CLI::IsMember({"direct", "residue"}));
    minweight->add_option("--budget", c.budget, "Maximum number of enumerated words");
    minweight->add_flag("--no-wrap", c.no_wrap, "BCH runs may not wrap around modulo n");
    auto* ideals = code->add_subcommand("ideals", "Enumerate all codes of the quotient");
    instance(ideals);
    ideals->add_option("--budget", c.budget, "Maximum number of codes");
    ideals->add_flag("--enumerate", c.enumerate, "List every code, not just the count");
    auto* member = code->add_subcommand("member", "Membership test for a word");
    instance(member);
    member->add_option("--exponents", c.exponents, "Exponents e_1,...,e_m")->required();
    member->add_option("--word", c.word, "Coordinates c_0,...,c_{n-1}");
    member->add_option("--poly", c.poly, "Word as a polynomial in X");
    member->add_option("--method", c.method, "crt or check")->check(CLI::IsMember({"crt", "check"}));

    auto* pir = app.add_subcommand("pir", "Quotients of finite principal ideal rings");
    pir->require_subcommand(1);
    auto* check = pir->add_subcommand("check", "Principality of R[X]/<X^n - lambda>");
    instance(check);
    auto* isometry = pir->add_subcommand("isometry", "Weight-preserving map onto the cyclic quotient");
    instance(isometry);
    isometry->add_option("--word", c.word, "Word per component, components separated by ';'");
    auto* verify = pir->add_subcommand("verify-chain", "Check that X - lambda generates a chain");
    instance(verify);
    auto* lattice = pir->add_subcommand("lattice", "Brute-force ideal lattice of a small quotient");
    lattice->add_option("--quotient", c.quotient, "e.g. Z4[X]/(X^2-1)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        json result;
        if (factor->parsed()) result = cmd_factor(c);
        else if (build->parsed()) result = cmd_code_build(c);
        else if (minweight->parsed()) result = cmd_code_minweight(c);
        else if (ideals->parsed()) result = cmd_code_ideals(c);
        else if (member->parsed()) result = cmd_code_member(c);
        else if (check->parsed()) result = cmd_pir_check(c);
        else if (isometry->parsed()) result = cmd_pir_isometry(c);
        else if (verify->parsed()) result = cmd_pir_verify_chain(c);
        else result = cmd_pir_lattice(c);
        if (c.output == "json") out << result.dump(2) << "\n";
        else render_text(result, "", out);
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    }
}

}  // namespace chaincodes::cli
