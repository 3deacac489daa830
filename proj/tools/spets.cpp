// spets: command-line interface to the reflection-group combinatorics kit.
//
// Subcommands: symbols, families, special, springer, pseudoparabolic,
// jinduce, fakedeg, oracle-check, dihedral. `--json` switches every
// subcommand to JSON output. Exit codes: 0 success, 2 bad parameters or
// domain errors, 1 internal inconsistency (failed cross-check).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spets/group.hpp"
#include "spets/induction.hpp"
#include "spets/invariants.hpp"
#include "spets/multipartition.hpp"
#include "spets/oracle.hpp"
#include "spets/springer.hpp"
#include "spets/symbol.hpp"

using nlohmann::json;
using namespace spets;

namespace {

constexpr long long kDefaultBound = 5000;
constexpr unsigned long long kDefaultSeed = 42;

GroupSpec parse_group(const std::string& text) {
    long long vals[3];
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        size_t next = text.find(',', pos);
        std::string piece = next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
        if (piece.empty() || (next == std::string::npos && i < 2))
            throw std::domain_error("group must be given as q,e,n (e.g. 3,1,3)");
        try {
            size_t used = 0;
            vals[i] = std::stoll(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw std::domain_error("group component '" + piece + "' is not an integer");
        }
        pos = next == std::string::npos ? text.size() : next + 1;
    }
    if (pos != text.size()) throw std::domain_error("group must have exactly three components q,e,n");
    return GroupSpec::from_qen(vals[0], vals[1], vals[2]);
}

SymbolType parse_type(const std::string& text) {
    size_t comma = text.find(',');
    if (comma == std::string::npos) throw std::domain_error("type must be given as r,s (e.g. 3,1)");
    try {
        return SymbolType{std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::domain_error("type components must be integers");
    }
}

Weight parse_weight(const std::string& text, const GroupSpec& g) {
    if (text == "spetsial") return Weight::spetsial(g.d, g.e);
    if (text == "basic") return Weight::basic(g.q());
    if (text == "zero") return Weight::zero(g.q());
    std::vector<long long> entries;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(',', pos);
        std::string piece = next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
        try {
            entries.push_back(std::stoll(piece));
        } catch (const std::exception&) {
            throw std::domain_error("weight entry '" + piece + "' is not an integer");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (static_cast<long long>(entries.size()) != g.q())
        throw std::domain_error("weight needs exactly q = " + std::to_string(g.q()) + " entries");
    return Weight(std::move(entries), g.d);
}

Multipartition parse_mp_for(const std::string& text, const GroupSpec& g) {
    Multipartition mp = Multipartition::parse(text);
    if (mp.count() != g.q())
        throw std::domain_error("multipartition '" + text + "' has " + std::to_string(mp.count()) +
                                " components; " + g.str() + " needs " + std::to_string(g.q()));
    if (mp.total() != g.n)
        throw std::domain_error("multipartition '" + text + "' has size " +
                                std::to_string(mp.total()) + "; " + g.str() + " needs n = " +
                                std::to_string(g.n));
    return mp;
}

// "χ3", "chi3", "3", each with an optional trailing ' for the primed label.
DihedralIrrep parse_dihedral_label(std::string text) {
    bool primed = false;
    if (!text.empty() && text.back() == '\'') {
        primed = true;
        text.pop_back();
    }
    const std::string chi_utf8 = "\xcf\x87";
    if (text.rfind(chi_utf8, 0) == 0) text = text.substr(chi_utf8.size());
    else if (text.rfind("chi", 0) == 0) text = text.substr(3);
    try {
        size_t used = 0;
        long long sub = std::stoll(text, &used);
        if (used != text.size() || sub < 0) throw std::invalid_argument(text);
        return DihedralIrrep{sub, primed};
    } catch (const std::exception&) {
        throw std::domain_error("cannot parse dihedral character label");
    }
}

bool is_dihedral_group(const GroupSpec& g) { return g.d == 1 && g.e >= 2 && g.n == 2; }

json symbol_json(const Symbol& sym, const std::string& mp_text) {
    json rows = json::array();
    for (const auto& row : sym.canonical().rows()) rows.push_back(row);
    return json{{"mp", mp_text},
                {"type", {sym.type().r, sym.type().s}},
                {"weight", sym.weight().entries()},
                {"rows", rows},
                {"distinguished", sym.distinguished()}};
}

// ---------------------------------------------------------------- symbols --
int run_symbols(const GroupSpec& g, SymbolType type, const std::string& weight_text,
                long long depth, bool as_json) {
    Weight w = parse_weight(weight_text, g);
    json out = json::array();
    long long total = 0, starred = 0;
    for (const auto& orbit : enumerate_orbits(g)) {
        Symbol sym(orbit.rep, g, type, w, depth);
        ++total;
        if (sym.distinguished()) ++starred;
        if (as_json) {
            out.push_back(symbol_json(sym, orbit.rep.str()));
        } else {
            std::cout << orbit.rep.str() << "\t" << sym.str()
                      << (sym.distinguished() ? "\t*" : "") << "\n";
        }
    }
    if (as_json) {
        std::cout << json{{"group", g.str()},
                          {"symbols", out},
                          {"count", total},
                          {"distinguished", starred}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << total << " symbols, " << starred << " distinguished\n";
    }
    return 0;
}

// --------------------------------------------------------------- families --
int run_families(const GroupSpec& g, bool as_json) {
    auto fams = families(g);
    if (as_json) {
        json out = json::array();
        for (const auto& fam : fams) {
            json members = json::array();
            for (const auto& m : fam.members) members.push_back(m.str());
            out.push_back(members);
        }
        std::cout << json{{"group", g.str()}, {"families", out}}.dump(2) << "\n";
    } else {
        for (const auto& fam : fams) {
            for (size_t i = 0; i < fam.members.size(); ++i)
                std::cout << (i ? " " : "") << fam.members[i].str();
            std::cout << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- special --
int run_special(const GroupSpec& g, bool as_json) {
    auto specials = special_irreps(g);
    if (as_json) {
        json out = json::array();
        for (const auto& s : specials) out.push_back(s.str());
        std::cout << json{{"group", g.str()}, {"special", out}}.dump(2) << "\n";
    } else {
        for (const auto& s : specials) std::cout << s.str() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- springer --
int run_springer(const GroupSpec& g, const std::string& lattice_text, bool as_json) {
    LatticeKind lattice = parse_lattice(lattice_text);
    std::vector<std::string> labels;
    if (is_dihedral_group(g)) {
        if (lattice != LatticeKind::L0)
            throw std::domain_error(g.str() + " carries only the lattice L0");
        for (const auto& rep : dihedral_springer(g.e)) labels.push_back(rep.label());
    } else {
        for (const auto& rep : springer_reps(g, lattice)) labels.push_back(rep.str());
    }
    if (as_json) {
        std::cout << json{{"group", g.str()},
                          {"lattice", lattice_str(lattice)},
                          {"springer", labels}}
                         .dump(2)
                  << "\n";
    } else {
        for (size_t i = 0; i < labels.size(); ++i) std::cout << (i ? " " : "") << labels[i];
        std::cout << "\n";
    }
    return 0;
}

// -------------------------------------------------------- pseudoparabolic --
int run_pseudoparabolic(const GroupSpec& g, const std::string& lattice_text, bool as_json) {
    LatticeKind lattice = parse_lattice(lattice_text);
    std::vector<std::string> shapes;
    if (is_dihedral_group(g)) {
        if (lattice != LatticeKind::L0)
            throw std::domain_error(g.str() + " carries only the lattice L0");
        for (const auto& sub : dihedral_pseudoparabolics(g.e)) shapes.push_back(sub.str());
    } else {
        for (const auto& shape : pseudoparabolics(g, lattice)) shapes.push_back(shape.str());
    }
    if (as_json) {
        std::cout << json{{"group", g.str()},
                          {"lattice", lattice_str(lattice)},
                          {"pseudoparabolic", shapes}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& s : shapes) std::cout << s << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- jinduce --
int run_jinduce(const std::string& mp_text, long long factor,
                const std::vector<std::string>& addends, const std::string& split_text,
                bool lift, bool as_json) {
    int modes = (factor != 1 ? 1 : 0) + (!addends.empty() ? 1 : 0) +
                (!split_text.empty() ? 1 : 0) + (lift ? 1 : 0);
    if (modes > 1)
        throw std::domain_error("choose one of --factor, --add, --split, --lift");
    Multipartition mp = Multipartition::parse(mp_text);
    json out;
    std::vector<std::string> lines;
    if (!addends.empty()) {
        Multipartition acc = mp;
        for (const auto& a : addends) acc = j_sum(acc, Multipartition::parse(a));
        lines.push_back(acc.str());
        out = json{{"result", acc.str()}};
    } else if (!split_text.empty()) {
        // r,s,r1,s1 — the second half has type (r-r1, s-s1).
        std::vector<long long> v;
        size_t pos = 0;
        while (pos <= split_text.size()) {
            size_t next = split_text.find(',', pos);
            std::string piece = next == std::string::npos ? split_text.substr(pos)
                                                          : split_text.substr(pos, next - pos);
            try {
                v.push_back(std::stoll(piece));
            } catch (const std::exception&) {
                throw std::domain_error("--split needs four integers r,s,r1,s1");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (v.size() != 4) throw std::domain_error("--split needs four integers r,s,r1,s1");
        auto [first, second] =
            split_multipartition(mp, v[0], v[1], v[2], v[3], v[0] - v[2], v[1] - v[3]);
        lines.push_back(first.str());
        lines.push_back(second.str());
        out = json{{"first", first.str()}, {"second", second.str()}};
    } else if (lift) {
        long long e = mp.count();
        Multipartition res = unique_special_lift(orbit_of(mp, 1, e), e);
        lines.push_back(res.str());
        out = json{{"result", res.str()}};
    } else {
        Multipartition res = induce_to_multiple(mp, factor);
        lines.push_back(res.str());
        out = json{{"result", res.str()}};
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& l : lines) std::cout << l << "\n";
    }
    return 0;
}

// For G(q,1,n) the oracle compares against the fake degree itself; for e > 1
// the restricted character from G(q,1,n) splits into s equal-fake-degree
// components, so the oracle sees s copies of the library polynomial.
Poly expected_oracle_poly(const Multipartition& mp, const GroupSpec& g) {
    Poly r = fake_degree(mp, g);
    long long s = g.e == 1 ? 1 : orbit_of(mp, g.d, g.e).stabilizer;
    Poly total = Poly::zero();
    for (long long i = 0; i < s; ++i) total += r;
    return total;
}

// ---------------------------------------------------------------- fakedeg --
int run_fakedeg(const GroupSpec& g, const std::string& mp_text, bool check_oracle,
                long long bound, bool as_json) {
    Multipartition mp = parse_mp_for(mp_text, g);
    Poly r = fake_degree(mp, g);
    std::optional<bool> oracle_ok;
    if (check_oracle) {
        GroupOracle oracle(g, bound);
        Poly from_oracle = oracle.fake_degree_oracle(mp);
        if (!(from_oracle == expected_oracle_poly(mp, g)))
            throw std::logic_error("oracle mismatch for " + mp.str() + " in " + g.str() +
                                   ": combinatorial " + r.str() + ", oracle " +
                                   from_oracle.str());
        oracle_ok = true;
    }
    if (as_json) {
        json out{{"group", g.str()}, {"mp", mp.str()}, {"fake_degree", r.str()}};
        if (oracle_ok) out["oracle"] = "OK";
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << r.str() << (oracle_ok ? " [oracle OK]" : "") << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ oracle-check --
int run_oracle_check(const GroupSpec& g, long long bound, long long sample,
                     unsigned long long seed, bool as_json) {
    GroupOracle oracle(g, bound);
    std::vector<MultipartitionOrbit> orbits = enumerate_orbits(g);
    if (sample > 0 && sample < static_cast<long long>(orbits.size())) {
        std::mt19937_64 rng(seed);
        // Deterministic Fisher-Yates (std::shuffle is implementation-defined).
        for (size_t i = orbits.size(); i > 1; --i)
            std::swap(orbits[i - 1], orbits[rng() % i]);
        orbits.resize(static_cast<size_t>(sample));
    }
    for (const auto& orbit : orbits) {
        Poly from_oracle = oracle.fake_degree_oracle(orbit.rep);
        Poly expected = expected_oracle_poly(orbit.rep, g);
        if (!(from_oracle == expected))
            throw std::logic_error("oracle mismatch for " + orbit.rep.str() + " in " + g.str() +
                                   ": combinatorial " + expected.str() + ", oracle " +
                                   from_oracle.str());
    }
    if (as_json) {
        std::cout << json{{"group", g.str()},
                          {"checked", orbits.size()},
                          {"ok", true}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "oracle check passed: " << orbits.size() << " characters of " << g.str()
                  << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- dihedral --
int run_dihedral(long long e, const std::string& from_text, bool primed,
                 const std::string& rep_text, bool as_json) {
    if (e < 1) throw std::domain_error("dihedral rank e must be >= 1");
    if (!from_text.empty() || !rep_text.empty()) {
        if (from_text.empty() || rep_text.empty())
            throw std::domain_error("--from and --rep must be given together");
        long long d;
        try {
            d = std::stoll(from_text);
        } catch (const std::exception&) {
            throw std::domain_error("--from must be an integer divisor of e");
        }
        DihedralIrrep rep = parse_dihedral_label(rep_text);
        DihedralIrrep induced = dihedral_j_induce(d, e, primed, rep);
        if (as_json) {
            std::cout << json{{"e", e},
                              {"from", (primed ? "G'(" : "G(") + std::to_string(d) + "," +
                                           std::to_string(d) + ",2)"},
                              {"rep", rep.label()},
                              {"result", induced.label()}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << induced.label() << "\n";
        }
        return 0;
    }
    auto reps = dihedral_irreps(e);
    auto specials = dihedral_specials(e);
    auto springer = dihedral_springer(e);
    auto subs = dihedral_pseudoparabolics(e);
    auto is_in = [](const std::vector<DihedralIrrep>& v, const DihedralIrrep& x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    if (as_json) {
        json jreps = json::array();
        for (const auto& r : reps)
            jreps.push_back(json{{"label", r.label()},
                                 {"b", r.b()},
                                 {"dim", r.dim(e)},
                                 {"special", is_in(specials, r)},
                                 {"springer", is_in(springer, r)}});
        json jsubs = json::array();
        for (const auto& s : subs) jsubs.push_back(s.str());
        std::cout << json{{"group", "G(" + std::to_string(e) + "," + std::to_string(e) + ",2)"},
                          {"representations", jreps},
                          {"pseudoparabolic", jsubs}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& r : reps) {
            std::cout << r.label() << "\tb=" << r.b() << "\tdim=" << r.dim(e)
                      << (is_in(specials, r) ? "\tspecial" : "")
                      << (is_in(springer, r) ? "\tspringer" : "") << "\n";
        }
        std::cout << "pseudoparabolic:";
        for (const auto& s : subs) std::cout << " " << s.str();
        std::cout << "\nspringer:";
        for (const auto& r : springer) std::cout << " " << r.label();
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorics of symbols, fake degrees, truncated induction and Springer "
                 "sets for the imprimitive complex reflection groups G(de,e,n)"};
    app.require_subcommand(1);

    std::string group_text, type_text = "1,0", weight_text = "spetsial", lattice_text = "L2";
    std::string mp_text, split_text, from_text, rep_text;
    std::vector<std::string> addends;
    long long depth = 0, factor = 1, bound = kDefaultBound, sample = 0, dihedral_e = 0;
    unsigned long long seed = kDefaultSeed;
    bool as_json = false, check_oracle = false, lift = false, primed = false;

    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", group_text, "group as q,e,n for G(q,e,n), e | q")->required();
    };
    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "JSON output");
    };

    auto* symbols_cmd = app.add_subcommand("symbols", "symbols of all orbits at a type/weight");
    add_group(symbols_cmd);
    symbols_cmd->add_option("--type", type_text, "symbol type r,s (default 1,0)");
    symbols_cmd->add_option("--weight", weight_text,
                            "spetsial (default), basic, zero, or q comma-separated integers");
    symbols_cmd->add_option("--depth", depth, "extra shift depth (default 0)");
    add_json(symbols_cmd);

    auto* families_cmd = app.add_subcommand("families", "families of irreducible representations");
    add_group(families_cmd);
    add_json(families_cmd);

    auto* special_cmd = app.add_subcommand("special", "special representations");
    add_group(special_cmd);
    add_json(special_cmd);

    auto* springer_cmd = app.add_subcommand("springer", "Springer representations of a lattice");
    add_group(springer_cmd);
    springer_cmd->add_option("--lattice", lattice_text, "L1, L2 or L0 (default L2)");
    add_json(springer_cmd);

    auto* pseudo_cmd =
        app.add_subcommand("pseudoparabolic", "pseudoparabolic subgroup shapes of a lattice");
    add_group(pseudo_cmd);
    pseudo_cmd->add_option("--lattice", lattice_text, "L1, L2 or L0 (default L2)");
    add_json(pseudo_cmd);

    auto* jinduce_cmd = app.add_subcommand("jinduce", "truncated-induction operations");
    jinduce_cmd->add_option("--mp", mp_text, "multipartition")->required();
    jinduce_cmd->add_option("--factor", factor, "induce G(e,1,n) -> G(ef,1,n)");
    jinduce_cmd->add_option("--add", addends, "add another multipartition (repeatable)");
    jinduce_cmd->add_option("--split", split_text, "split a distinguished symbol: r,s,r1,s1");
    jinduce_cmd->add_flag("--lift", lift, "unique special lift of a G(e,e,n) orbit");
    add_json(jinduce_cmd);

    auto* fakedeg_cmd = app.add_subcommand("fakedeg", "fake degree of one representation");
    add_group(fakedeg_cmd);
    fakedeg_cmd->add_option("--mp", mp_text, "multipartition label")->required();
    fakedeg_cmd->add_flag("--check-oracle", check_oracle,
                          "cross-check against the brute-force character oracle");
    fakedeg_cmd->add_option("--bound", bound, "largest group order the oracle enumerates")
        ->envname("SPETS_KIT_BOUND");
    add_json(fakedeg_cmd);

    auto* oracle_cmd =
        app.add_subcommand("oracle-check", "cross-check all fake degrees of a group");
    add_group(oracle_cmd);
    oracle_cmd->add_option("--bound", bound, "largest group order the oracle enumerates")
        ->envname("SPETS_KIT_BOUND");
    oracle_cmd->add_option("--sample", sample, "check only this many labels (0 = all)");
    oracle_cmd->add_option("--seed", seed, "seed for the sampling order (default 42)");
    add_json(oracle_cmd);

    auto* dihedral_cmd = app.add_subcommand("dihedral", "dihedral group G(e,e,2) data");
    dihedral_cmd->add_option("--e", dihedral_e, "the e of G(e,e,2)")->required();
    dihedral_cmd->add_option("--from", from_text, "j-induce from G(d,d,2): the divisor d");
    dihedral_cmd->add_flag("--primed", primed, "use the reflected copy G'(d,d,2)");
    dihedral_cmd->add_option("--rep", rep_text, "character to induce, e.g. chi1");
    add_json(dihedral_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (symbols_cmd->parsed())
            return run_symbols(parse_group(group_text), parse_type(type_text), weight_text, depth,
                               as_json);
        if (families_cmd->parsed()) return run_families(parse_group(group_text), as_json);
        if (special_cmd->parsed()) return run_special(parse_group(group_text), as_json);
        if (springer_cmd->parsed())
            return run_springer(parse_group(group_text), lattice_text, as_json);
        if (pseudo_cmd->parsed())
            return run_pseudoparabolic(parse_group(group_text), lattice_text, as_json);
        if (jinduce_cmd->parsed())
            return run_jinduce(mp_text, factor, addends, split_text, lift, as_json);
        if (fakedeg_cmd->parsed())
            return run_fakedeg(parse_group(group_text), mp_text, check_oracle, bound, as_json);
        if (oracle_cmd->parsed())
            return run_oracle_check(parse_group(group_text), bound, sample, seed, as_json);
        if (dihedral_cmd->parsed())
            return run_dihedral(dihedral_e, from_text, primed, rep_text, as_json);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
