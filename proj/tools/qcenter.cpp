#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcenter/characters.hpp"
#include "qcenter/errors.hpp"
#include "qcenter/lattice.hpp"
#include "qcenter/monoid.hpp"
#include "qcenter/presentation.hpp"
#include "qcenter/verification.hpp"
#include "qcenter/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace qcenter;

namespace {

constexpr const char* kSchema = "qcenter/1";

Int budget_default() {
    if (const char* env = std::getenv("QCENTER_BUDGET")) return std::stoll(env);
    return 100'000'000;
}

Weight parse_weight(const std::string& s, int rank) {
    Weight w;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) w.push_back(std::stoll(part));
    if ((int)w.size() != rank)
        throw std::invalid_argument("weight needs " + std::to_string(rank) +
                                    " comma-separated integers, got " + s);
    return w;
}

json weight_json(const Weight& w) { return json(w); }

std::string weight_text(const Weight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

std::string monomial_text(const std::map<std::string, Int>& side) {
    if (side.empty()) return "1";
    std::string s;
    for (const auto& [name, e] : side) {
        if (!s.empty()) s += " ";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

struct Options {
    char family = 'A';
    int rank = 1;
    bool as_json = false;
    Int budget = budget_default();
};

void add_type_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--type", o.family, "family letter A..G")->required();
    cmd->add_option("--rank", o.rank, "rank")->required();
    cmd->add_flag("--json", o.as_json, "machine-readable output");
    cmd->add_option("--budget", o.budget, "enumeration budget override");
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

int run_classify(const Options& o) {
    LieType t = make_type(o.family, o.rank);
    auto hb = hilbert_basis(t, o.budget);
    bool poly = classify_polynomial(t);
    std::string case_name = lattice_case_name(classify_lattice_case(t));
    json j = {{"schema", kSchema},
              {"type", t.str()},
              {"polynomial", poly},
              {"lattice_case", case_name},
              {"hilbert_basis_size", hb.elements.size()}};
    std::ostringstream text;
    text << t.str() << ": polynomial=" << (poly ? "true" : "false") << ", case=" << case_name
         << ", |basis|=" << hb.elements.size() << "\n";
    emit(j, o.as_json, text.str());
    return 0;
}

int run_lattice(const Options& o) {
    LieType t = make_type(o.family, o.rank);
    IntegerLattice l = even_weight_lattice(t);
    json j = {{"schema", kSchema},
              {"type", t.str()},
              {"lattice_case", lattice_case_name(classify_lattice_case(t))},
              {"hnf", l.hnf},
              {"index_in_weight_lattice", lattice_index(l)}};
    std::ostringstream text;
    text << t.str() << " even sublattice (HNF rows, fundamental-weight coordinates):\n";
    for (const auto& row : l.hnf) text << "  " << weight_text(row) << "\n";
    text << "index in the weight lattice: " << lattice_index(l) << "\n";
    emit(j, o.as_json, text.str());
    return 0;
}

const char* tag_name(GenClassTag tag) {
    switch (tag) {
        case GenClassTag::Single: return "single";
        case GenClassTag::Special: return "special";
        default: return "ordinary";
    }
}

int run_hilbert_basis(const Options& o) {
    LieType t = make_type(o.family, o.rank);
    auto hb = hilbert_basis(t, o.budget);
    json elems = json::array();
    std::ostringstream text;
    text << t.str() << " minimal generating set (" << hb.elements.size() << " elements):\n";
    for (const auto& e : hb.elements) {
        json entry = {{"weight", weight_json(e.weight)},
                      {"square_length", e.square_length.str()}};
        text << "  (" << weight_text(e.weight) << ")  |.|^2 = " << e.square_length.str();
        if (t.family == 'A' && t.rank >= 2) {
            auto cls = classify_sequence(t.rank, NSequence{e.weight});
            entry["class"] = tag_name(cls.tag);
            text << "  [" << tag_name(cls.tag) << "]";
        }
        text << "\n";
        elems.push_back(entry);
    }
    json j = {{"schema", kSchema},
              {"type", t.str()},
              {"box_bounds", hb.box_bounds},
              {"elements", elems}};
    emit(j, o.as_json, text.str());
    return 0;
}

int run_presentation(const Options& o) {
    LieType t = make_type(o.family, o.rank);
    auto p = build_presentation(t);
    json gens = json::array(), rels = json::array();
    std::ostringstream text;
    text << t.str() << " presentation: " << (p.is_polynomial ? "polynomial" : "non-polynomial")
         << ", " << p.generators.size() << " generators, " << p.relations.size()
         << " relations\n";
    for (const auto& g : p.generators) {
        gens.push_back({{"name", g.name},
                        {"weight", weight_json(g.element.weight)},
                        {"square_length", g.element.square_length.str()}});
        text << "  " << g.name << " = (" << weight_text(g.element.weight) << ")\n";
    }
    for (const auto& rel : p.relations) {
        rels.push_back({{"lhs", rel.lhs}, {"rhs", rel.rhs}});
        text << "  " << monomial_text(rel.lhs) << " = " << monomial_text(rel.rhs) << "\n";
    }
    json j = {{"schema", kSchema},
              {"type", t.str()},
              {"polynomial", p.is_polynomial},
              {"generators", gens},
              {"relations", rels}};
    emit(j, o.as_json, text.str());
    return 0;
}

int run_orbit(const Options& o, const std::string& weight_arg) {
    LieType t = make_type(o.family, o.rank);
    Weight w = parse_weight(weight_arg, t.rank);
    WeylOrbit orb = orbit(t, w, o.budget);
    json j = {{"schema", kSchema},
              {"type", t.str()},
              {"weight", weight_json(w)},
              {"dominant_representative", weight_json(orb.dominant_rep)},
              {"orbit_size", orb.size()}};
    std::ostringstream text;
    text << t.str() << " orbit of (" << weight_text(w) << "): size " << orb.size()
         << ", dominant representative (" << weight_text(orb.dominant_rep) << ")\n";
    emit(j, o.as_json, text.str());
    return 0;
}

json ring_element_json(const RingElement& e) {
    json arr = json::array();
    for (const auto& [w, c] : e)
        arr.push_back({{"weight", weight_json(w)}, {"multiplicity", c}});
    return arr;
}

int run_tensor(const Options& o, const std::string& left, const std::string& right) {
    LieType t = make_type(o.family, o.rank);
    Weight a = parse_weight(left, t.rank), b = parse_weight(right, t.rank);
    auto dec = tensor_decompose(t, a, b);
    json j = {{"schema", kSchema},
              {"type", t.str()},
              {"left", weight_json(a)},
              {"right", weight_json(b)},
              {"decomposition", ring_element_json(dec)}};
    std::ostringstream text;
    text << t.str() << " tensor (" << weight_text(a) << ") x (" << weight_text(b) << "):\n";
    for (const auto& [nu, c] : dec)
        text << "  (" << weight_text(nu) << ") x" << c << "\n";
    emit(j, o.as_json, text.str());
    return 0;
}

int run_character(const Options& o, const std::string& weight_arg) {
    LieType t = make_type(o.family, o.rank);
    Weight w = parse_weight(weight_arg, t.rank);
    auto mults = weight_multiplicities(t, w);
    json arr = json::array();
    std::ostringstream text;
    text << t.str() << " module (" << weight_text(w) << "): dimension "
         << weyl_dimension(t, w) << ", dominant weight multiplicities:\n";
    for (const auto& [mu, m] : mults) {
        arr.push_back({{"weight", weight_json(mu)}, {"multiplicity", m}});
        text << "  (" << weight_text(mu) << ") x" << m << "\n";
    }
    json j = {{"schema", kSchema},
              {"type", t.str()},
              {"highest_weight", weight_json(w)},
              {"dimension", weyl_dimension(t, w)},
              {"multiplicities", arr}};
    emit(j, o.as_json, text.str());
    return 0;
}

int run_verify(bool as_json) {
    auto results = run_verification_suite();
    bool all_ok = true;
    json arr = json::array();
    std::ostringstream text;
    for (const auto& r : results) {
        all_ok = all_ok && r.ok;
        arr.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        text << (r.ok ? "PASS" : "FAIL") << "  " << r.name << "\n      " << r.detail << "\n";
    }
    json j = {{"schema", kSchema}, {"suite", "paper"}, {"ok", all_ok}, {"checks", arr}};
    emit(j, as_json, text.str());
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact center structure of quantized enveloping algebras"};
    app.require_subcommand(1);

    Options o;
    std::string weight_arg, left_arg, right_arg, suite = "paper";
    bool verify_json = false;

    auto* classify = app.add_subcommand("classify", "polynomiality and lattice case");
    add_type_flags(classify, o);
    auto* lattice = app.add_subcommand("lattice", "even sublattice in Hermite normal form");
    add_type_flags(lattice, o);
    auto* hb = app.add_subcommand("hilbert-basis", "minimal generating set of the monoid");
    add_type_flags(hb, o);
    auto* pres = app.add_subcommand("presentation", "generators and binomial relations");
    add_type_flags(pres, o);
    auto* orb = app.add_subcommand("orbit", "Weyl orbit of a weight");
    add_type_flags(orb, o);
    orb->add_option("--weight", weight_arg, "comma-separated coordinates")->required();
    auto* tens = app.add_subcommand("tensor", "tensor product decomposition");
    add_type_flags(tens, o);
    tens->add_option("--left", left_arg, "left highest weight")->required();
    tens->add_option("--right", right_arg, "right highest weight")->required();
    auto* chr = app.add_subcommand("character", "dominant weight multiplicities");
    add_type_flags(chr, o);
    chr->add_option("--weight", weight_arg, "highest weight")->required();
    auto* ver = app.add_subcommand("verify", "run the cross-verification suite");
    ver->add_option("--suite", suite, "suite name (paper)");
    ver->add_flag("--json", verify_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(o);
        if (lattice->parsed()) return run_lattice(o);
        if (hb->parsed()) return run_hilbert_basis(o);
        if (pres->parsed()) return run_presentation(o);
        if (orb->parsed()) return run_orbit(o, weight_arg);
        if (tens->parsed()) return run_tensor(o, left_arg, right_arg);
        if (chr->parsed()) return run_character(o, weight_arg);
        if (ver->parsed()) {
            if (suite != "paper") {
                std::cerr << "unknown suite '" << suite << "'; only 'paper' is available\n";
                return 2;
            }
            return run_verify(verify_json);
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << " (reached " << e.partial_count
                  << ")\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
