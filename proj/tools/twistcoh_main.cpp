// Command-line frontend: every engine behind one binary with structured
// (JSON or aligned-table) output.  Exit code 0 for any computed answer,
// including "zero" and "Unknown" verdicts; 2 for validation problems.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "twistcoh/delpezzo.hpp"
#include "twistcoh/serialize.hpp"

using json = nlohmann::json;
using namespace twistcoh;

namespace {

constexpr const char* kSchemaVersion = "1";

struct Output {
    std::string format = "json";  // json | table
    std::string out_path;         // optional CSV sink
};

json base_record(const std::string& command) {
    return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

json int_value(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

void print_table(const json& rec, std::ostream& os) {
    if (rec.contains("rows") && rec["rows"].is_array()) {
        for (const json& row : rec["rows"]) os << row.dump() << "\n";
        return;
    }
    for (const auto& [k, v] : rec.items()) {
        os << k << ": ";
        if (v.is_string()) os << v.get<std::string>();
        else os << v.dump();
        os << "\n";
    }
}

std::string csv_escape(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void write_csv(const std::vector<json>& rows, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open --out path: " + path);
    if (rows.empty()) return;
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
    for (size_t i = 0; i < keys.size(); ++i)
        f << (i ? "," : "") << csv_escape(json(keys[i]));
    f << "\n";
    for (const json& row : rows) {
        for (size_t i = 0; i < keys.size(); ++i) {
            f << (i ? "," : "");
            if (row.contains(keys[i])) f << csv_escape(row[keys[i]]);
        }
        f << "\n";
    }
}

void emit_all(const std::vector<json>& records, const Output& out) {
    if (out.format == "table") {
        for (const json& r : records) print_table(r, std::cout);
    } else if (records.size() == 1) {
        std::cout << records.front().dump(2) << "\n";
    } else {
        std::cout << json(records).dump(2) << "\n";
    }
    if (!out.out_path.empty()) write_csv(records, out.out_path);
}

// "l=-4..4" -> (name, lo, hi)
struct Sweep {
    std::string name;
    int lo = 0, hi = 0;
};

Sweep parse_sweep(const std::string& text) {
    auto eq = text.find('=');
    auto dots = text.find("..", eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || dots == std::string::npos)
        throw std::invalid_argument("--sweep expects name=lo..hi, got: " + text);
    Sweep s;
    s.name = text.substr(0, eq);
    s.lo = std::stoi(text.substr(eq + 1, dots - eq - 1));
    s.hi = std::stoi(text.substr(dots + 2));
    if (s.lo > s.hi) throw std::invalid_argument("--sweep range is empty");
    if (s.hi - s.lo > 10000) throw std::invalid_argument("--sweep range too large");
    return s;
}

// Runs `one` once, or once per swept value with the named parameter rebound.
std::vector<json> run_swept(const std::string& sweep_text,
                            std::map<std::string, int*> params,
                            const std::function<json()>& one) {
    if (sweep_text.empty()) return {one()};
    Sweep s = parse_sweep(sweep_text);
    auto it = params.find(s.name);
    if (it == params.end())
        throw std::invalid_argument("--sweep: unknown parameter " + s.name);
    std::vector<json> records;
    for (int v = s.lo; v <= s.hi; ++v) {
        *it->second = v;
        records.push_back(one());
    }
    return records;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

struct AmbientFlags {
    std::string family = "projective";
    int n = 3;
    int dimension = 0;
    int index = 0;
    bool assume_hss = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--ambient", family,
                        "projective | quadric | lagrangian | other")
            ->check(CLI::IsMember({"projective", "quadric", "lagrangian", "other"}));
        cmd->add_option("--n", n,
                        "family parameter: dimension for projective/quadric, "
                        "rank for lagrangian");
        cmd->add_option("--dimension", dimension, "dimension (ambient=other)");
        cmd->add_option("--index", index, "Fano index (ambient=other)");
        cmd->add_flag("--assume-hss", assume_hss,
                      "assert the 'other' space is an irreducible Hermitian "
                      "symmetric space");
    }

    HSSDescriptor build() const {
        if (family == "projective") return HSSDescriptor::projective_space(n);
        if (family == "quadric") return HSSDescriptor::quadric(n);
        if (family == "lagrangian")
            return HSSDescriptor::lagrangian_grassmannian(n);
        return HSSDescriptor::other(dimension, index, assume_hss);
    }
};

json verdict_record(const std::string& command, const StabilityVerdict& v) {
    json rec = base_record(command);
    rec["verdict"] = stability_name(v.verdict);
    rec["certificate"] = v.certificate;
    rec["relied_on_flags"] = v.relied_on_flags;
    if (v.destabilizer_hint) rec["destabilizer_hint"] = *v.destabilizer_hint;
    if (!v.condition_report.empty()) rec["condition_report"] = v.condition_report;
    return rec;
}

std::string point_display(const PlanePoint& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.coords.size(); ++i) {
        if (i) s += ":";
        s += p.coords[i].str();
    }
    s += "]";
    return s;
}

json field_record(const PolyVectorField& f) {
    json comps = json::array();
    for (const HomogeneousPolynomial& c : f.components) comps.push_back(c.str());
    return json{{"twist", f.twist}, {"components", comps}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twisted-cohomology, Milnor-algebra, stability and "
                 "del Pezzo computations"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "json | table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--out", out.out_path, "also write results as CSV here");

    std::function<std::vector<json>()> action;

    // ------------------------------------------------------------------ bott
    {
        auto* cmd = app.add_subcommand(
            "bott", "dimension of H^q(P^n, Omega^p(l)) by the closed formula");
        auto n = std::make_shared<int>(1);
        auto p = std::make_shared<int>(0);
        auto q = std::make_shared<int>(0);
        auto l = std::make_shared<int>(0);
        auto sweep = std::make_shared<std::string>();
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--l", *l);
        cmd->add_option("--sweep", *sweep, "e.g. l=-4..4");
        cmd->callback([&action, n, p, q, l, sweep] {
            action = [n, p, q, l, sweep] {
                return run_swept(
                    *sweep,
                    {{"n", n.get()}, {"p", p.get()}, {"q", q.get()}, {"l", l.get()}},
                    [&] {
                        json rec = base_record("bott");
                        rec["n"] = *n;
                        rec["p"] = *p;
                        rec["q"] = *q;
                        rec["l"] = *l;
                        rec["dimension"] = int_value(bott_dimension(*n, *p, *q, *l));
                        return rec;
                    });
            };
        });
    }

    // --------------------------------------------------------------- quadric
    {
        auto* cmd = app.add_subcommand(
            "quadric", "case and nonvanishing of H^q(Q^n, Omega^p(l))");
        auto n = std::make_shared<int>(2);
        auto p = std::make_shared<int>(0);
        auto q = std::make_shared<int>(0);
        auto l = std::make_shared<int>(0);
        auto sweep = std::make_shared<std::string>();
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--l", *l);
        cmd->add_option("--sweep", *sweep, "e.g. l=-4..4");
        cmd->callback([&action, n, p, q, l, sweep] {
            action = [n, p, q, l, sweep] {
                return run_swept(
                    *sweep,
                    {{"n", n.get()}, {"p", p.get()}, {"q", q.get()}, {"l", l.get()}},
                    [&] {
                        json rec = base_record("quadric");
                        rec["n"] = *n;
                        rec["p"] = *p;
                        rec["q"] = *q;
                        rec["l"] = *l;
                        rec["case"] = quadric_case(*n, *p, *l);
                        rec["nonzero"] = quadric_nonvanishing(*n, *p, *q, *l);
                        return rec;
                    });
            };
        });
    }

    // --------------------------------------------------------------- snow-cn
    {
        auto* cmd = app.add_subcommand(
            "snow-cn",
            "sign-pattern vanishing test for Omega^p(l) on Sp(2n)/U(n)");
        auto n = std::make_shared<int>(2);
        auto p = std::make_shared<int>(0);
        auto l = std::make_shared<int>(0);
        auto q = std::make_shared<int>(-1);
        auto sweep = std::make_shared<std::string>();
        cmd->add_option("--n", *n, "rank")->required();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--l", *l);
        cmd->add_option("--q", *q, "restrict to one cohomological degree");
        cmd->add_option("--sweep", *sweep, "e.g. l=1..4");
        cmd->callback([&action, n, p, l, q, sweep] {
            action = [n, p, l, q, sweep] {
                return run_swept(
                    *sweep,
                    {{"n", n.get()}, {"p", p.get()}, {"l", l.get()}, {"q", q.get()}},
                    [&] {
                        json rec = base_record("snow-cn");
                        rec["n"] = *n;
                        rec["p"] = *p;
                        rec["l"] = *l;
                        bool possible = false;
                        for (const CnSequence& s :
                             enumerate_admissible_sequences(*n, *l)) {
                            if (s.weight != *p) continue;
                            if (*q >= 0 && s.cohomological_degree != *q) continue;
                            possible = true;
                            break;
                        }
                        if (*q >= 0) rec["q"] = *q;
                        else rec["q"] = "all";
                        rec["status"] = possible ? "possibly_nonzero" : "zero";
                        rec["admissible_sequences_checked"] = 1 << *n;
                        return rec;
                    });
            };
        });
    }

    // ----------------------------------------------------------- classify-top
    {
        auto* cmd = app.add_subcommand(
            "classify-top",
            "nonvanishing of H^q(M, Omega^{N-1}(l)) on an irreducible "
            "Hermitian symmetric space");
        auto amb = std::make_shared<AmbientFlags>();
        auto q = std::make_shared<int>(0);
        auto l = std::make_shared<int>(0);
        auto sweep = std::make_shared<std::string>();
        amb->attach(cmd);
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--l", *l);
        cmd->add_option("--sweep", *sweep, "e.g. l=-4..4");
        cmd->callback([&action, amb, q, l, sweep] {
            action = [amb, q, l, sweep] {
                return run_swept(
                    *sweep, {{"q", q.get()}, {"l", l.get()}}, [&] {
                        HSSDescriptor desc = amb->build();
                        json rec = base_record("classify-top");
                        rec["space"] = desc.name();
                        rec["dimension"] = desc.dimension;
                        rec["q"] = *q;
                        rec["l"] = *l;
                        std::optional<bool> v = classify_top_forms(desc, *q, *l);
                        if (v) rec["nonzero"] = *v;
                        else rec["nonzero"] = "unknown";
                        return rec;
                    });
            };
        });
    }

    // ---------------------------------------------------------------- milnor
    {
        auto* cmd = app.add_subcommand(
            "milnor", "graded Milnor algebra of a smooth hypersurface");
        auto vars = std::make_shared<int>(3);
        auto degree = std::make_shared<int>(3);
        auto poly = std::make_shared<std::string>();
        auto faithful = std::make_shared<std::string>();
        auto pairing = std::make_shared<int>(-1);
        cmd->add_option("--vars", *vars, "number of variables")->required();
        cmd->add_option("--degree", *degree, "degree (Fermat default)");
        cmd->add_option("--poly", *poly, "explicit polynomial instead of Fermat");
        cmd->add_option("--faithful", *faithful,
                        "also test faithfulness of this element");
        cmd->add_option("--pairing", *pairing,
                        "also report whether the degree-i pairing has full rank");
        cmd->callback([&action, vars, degree, poly, faithful, pairing] {
            action = [vars, degree, poly, faithful, pairing] {
                HypersurfaceSpec spec =
                    poly->empty()
                        ? HypersurfaceSpec::fermat(*vars, *degree)
                        : HypersurfaceSpec::from_polynomial(
                              parse_polynomial(*poly, *vars));
                MilnorAlgebra ma(spec);
                json rec = base_record("milnor");
                rec["vars"] = spec.num_vars;
                rec["degree"] = spec.degree_h;
                rec["rho"] = ma.rho();
                rec["artinian"] = ma.artinian_within_bound();
                auto hs = ma.hilbert_series();
                if (hs) {
                    rec["hilbert"] = *hs;
                    rec["symmetric"] = ma.hilbert_symmetric();
                    rec["unimodal"] = ma.hilbert_unimodal();
                } else {
                    rec["hilbert"] = nullptr;
                }
                if (!faithful->empty())
                    rec["faithful"] = ma.is_faithful(
                        parse_polynomial(*faithful, spec.num_vars));
                if (*pairing >= 0)
                    rec["pairing_full_rank"] = ma.pairing_full_rank(*pairing);
                return std::vector<json>{rec};
            };
        });
    }

    // ------------------------------------------------------------------- slp
    {
        auto* cmd = app.add_subcommand(
            "slp",
            "strong-Lefschetz witness search for a monomial complete "
            "intersection");
        auto degrees = std::make_shared<std::string>();
        auto power = std::make_shared<int>(-1);
        auto seed = std::make_shared<unsigned long long>(kDefaultSeed);
        cmd->add_option("--degrees", *degrees, "e.g. 2,2,3")->required();
        cmd->add_option("--power-bound", *power,
                        "largest Lefschetz power to verify (default: socle degree)");
        cmd->add_option("--seed", *seed)->capture_default_str();
        cmd->callback([&action, degrees, power, seed] {
            action = [degrees, power, seed] {
                std::vector<int> ds = parse_int_list(*degrees);
                int bound = *power;
                if (bound < 0) {
                    bound = 0;
                    for (int d : ds) bound += d - 1;
                }
                SlpCheck c = check_slp(ds, bound, *seed);
                json rec = base_record("slp");
                rec["degrees"] = ds;
                rec["has_slp"] = c.has_slp;
                rec["attempts"] = c.attempts;
                rec["power_bound"] = c.power_bound;
                rec["socle_degree"] = c.socle_degree;
                if (c.has_slp) rec["witness"] = c.witness.str();
                return std::vector<json>{rec};
            };
        });
    }

    // ------------------------------------------------------------- vanishing
    {
        auto* cmd = app.add_subcommand(
            "vanishing",
            "vanishing predicate for H^q(Y, Omega_Y^p(l)) on a complete "
            "intersection, with optional witness discharge");
        auto amb = std::make_shared<AmbientFlags>();
        auto degrees = std::make_shared<std::string>();
        auto p = std::make_shared<int>(1);
        auto q = std::make_shared<int>(0);
        auto l = std::make_shared<int>(0);
        auto unit = std::make_shared<bool>(false);
        auto witnesses = std::make_shared<bool>(false);
        auto discharge = std::make_shared<bool>(false);
        amb->attach(cmd);
        cmd->add_option("--degrees", *degrees, "e.g. 3 or 2,2")->required();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--l", *l);
        cmd->add_flag("--allow-unit-degrees", *unit);
        cmd->add_flag("--witnesses", *witnesses, "list the reduction obligations");
        cmd->add_flag("--discharge", *discharge,
                      "attempt to certify every obligation zero");
        cmd->callback([&action, amb, degrees, p, q, l, unit, witnesses, discharge] {
            action = [amb, degrees, p, q, l, unit, witnesses, discharge] {
                CompleteIntersectionSpec spec = CompleteIntersectionSpec::make(
                    amb->build(), parse_int_list(*degrees));
                json rec = base_record("vanishing");
                rec["variety"] = spec.name();
                rec["p"] = *p;
                rec["q"] = *q;
                rec["l"] = *l;
                VanishingCertificate cert =
                    theorem12_predicate(spec, *p, *q, *l, *unit);
                rec["verdict"] = verdict_name(cert.verdict);
                rec["reason_chain"] = cert.reason_chain;
                if (*witnesses || *discharge) {
                    auto ws = lemma51_witnesses(spec, *p, *q, *l);
                    rec["witness_count"] = ws.size();
                    if (*witnesses) rec["witnesses"] = ws;
                    if (*discharge) {
                        int done = 0;
                        json resisting = json::array();
                        for (const KoszulWitness& w : ws) {
                            if (discharge_witness(spec, w)) ++done;
                            else resisting.push_back(w);
                        }
                        rec["discharged"] = done;
                        rec["resisting"] = resisting;
                    }
                }
                return std::vector<json>{rec};
            };
        });
    }

    // ------------------------------------------------------------- stability
    {
        auto* cmd = app.add_subcommand(
            "stability", "stability verdicts for tangent bundles and their "
                         "hypersurface restrictions");
        auto amb = std::make_shared<AmbientFlags>();
        auto degrees = std::make_shared<std::string>("3");
        auto theorem = std::make_shared<std::string>("13");
        auto d = std::make_shared<int>(1);
        auto dh = std::make_shared<int>(1);
        auto nn = std::make_shared<int>(3);
        auto h0 = std::make_shared<int>(-1);
        auto picard = std::make_shared<bool>(false);
        auto xgen = std::make_shared<bool>(false);
        auto ygen = std::make_shared<bool>(false);
        amb->attach(cmd);
        cmd->add_option("--theorem", *theorem, "13 | 15 | 16 | 52")
            ->check(CLI::IsMember({"13", "15", "16", "52"}));
        cmd->add_option("--degrees", *degrees, "complete intersection degrees");
        cmd->add_option("--d", *d, "degree of the restricted divisor X");
        cmd->add_option("--dh", *dh, "hypersurface degree (theorem 16)");
        cmd->add_option("--dim", *nn, "dimension of X (theorem 16)");
        cmd->add_option("--h0", *h0,
                        "computed dim H^0(T_Y(t_max)|_X) (theorem 52 verdict)");
        cmd->add_flag("--picard-surjective", *picard);
        cmd->add_flag("--x-general", *xgen);
        cmd->add_flag("--y-general", *ygen);
        cmd->callback([&action, amb, degrees, theorem, d, dh, nn, h0, picard,
                       xgen, ygen] {
            action = [amb, degrees, theorem, d, dh, nn, h0, picard, xgen, ygen] {
                json rec;
                if (*theorem == "16") {
                    rec = verdict_record("stability",
                                         theorem16_verdict(*nn, *dh, *d));
                    rec["theorem"] = "16";
                    return std::vector<json>{rec};
                }
                CompleteIntersectionSpec spec = CompleteIntersectionSpec::make(
                    amb->build(), parse_int_list(*degrees));
                if (*theorem == "13") {
                    rec = verdict_record("stability", theorem13_verdict(spec));
                } else if (*theorem == "15") {
                    RestrictionFlags flags;
                    flags.picard_restriction_surjective = *picard;
                    flags.x_general = *xgen;
                    flags.y_general = *ygen;
                    rec = verdict_record("stability",
                                         theorem15_verdict(spec, *d, flags));
                } else {
                    Prop52TestSet ts = prop52_test_set(spec, *d);
                    if (*h0 >= 0) {
                        rec = verdict_record("stability",
                                             prop52_verdict(spec, *d, *h0));
                    } else {
                        rec = base_record("stability");
                    }
                    rec["t_max"] = ts.t_max;
                    rec["justification"] = ts.justification;
                }
                rec["theorem"] = *theorem;
                rec["variety"] = spec.name();
                return std::vector<json>{rec};
            };
        });
    }

    // -------------------------------------------------------- restrict-bound
    {
        auto* cmd = app.add_subcommand(
            "restrict-bound",
            "effective restriction bound from exact Chern data");
        auto rank = std::make_shared<int>(2);
        auto c1sq = std::make_shared<std::string>("0");
        auto c2 = std::make_shared<std::string>("0");
        auto hn = std::make_shared<std::string>("1");
        cmd->add_option("--rank", *rank)->required();
        cmd->add_option("--c1sq", *c1sq, "c1^2.H^{n-2}, exact rational");
        cmd->add_option("--c2", *c2, "c2.H^{n-2}, exact rational");
        cmd->add_option("--hn", *hn, "H^n, exact rational > 0");
        cmd->callback([&action, rank, c1sq, c2, hn] {
            action = [rank, c1sq, c2, hn] {
                ChernData cd;
                cd.rank = *rank;
                cd.c1_squared_Hn2 = Rational::parse(*c1sq);
                cd.c2_Hn2 = Rational::parse(*c2);
                cd.Hn = Rational::parse(*hn);
                json rec = base_record("restrict-bound");
                rec["rank"] = cd.rank;
                rec["discriminant"] = cd.discriminant_Hn2().str();
                rec["bound"] = int_value(langer_bound(cd));
                return std::vector<json>{rec};
            };
        });
    }

    // ---------------------------------------------------------- vectorfields
    {
        auto* cmd = app.add_subcommand(
            "vectorfields",
            "twisted vector fields on projective space, a hypersurface, or a "
            "divisor inside one");
        cmd->set_help_flag("--help", "print help");  // frees --h for the input
        auto model = std::make_shared<std::string>("hypersurface");
        auto m = std::make_shared<int>(2);
        auto vars = std::make_shared<int>(5);
        auto h = std::make_shared<std::string>();
        auto f = std::make_shared<std::string>();
        auto fdeg = std::make_shared<int>(0);
        auto t = std::make_shared<int>(0);
        auto seed = std::make_shared<unsigned long long>(kDefaultSeed);
        auto basis = std::make_shared<bool>(false);
        cmd->add_option("--model", *model,
                        "projective | hypersurface | restricted | surjectivity")
            ->check(CLI::IsMember(
                {"projective", "hypersurface", "restricted", "surjectivity"}));
        cmd->add_option("--m", *m, "dimension of projective space");
        cmd->add_option("--vars", *vars, "number of variables for h");
        cmd->add_option("--h", *h, "hypersurface polynomial");
        cmd->add_option("--f", *f,
                        "divisor polynomial (or use --f-degree for a seeded "
                        "general one)");
        cmd->add_option("--f-degree", *fdeg, "degree of a seeded general divisor");
        cmd->add_option("--t", *t, "twist")->required();
        cmd->add_option("--seed", *seed)->capture_default_str();
        cmd->add_flag("--basis", *basis, "include the basis fields");
        cmd->callback([&action, model, m, vars, h, f, fdeg, t, seed, basis] {
            action = [model, m, vars, h, f, fdeg, t, seed, basis] {
                json rec = base_record("vectorfields");
                rec["model"] = *model;
                rec["t"] = *t;
                auto emit_space = [&](const SectionSpace& s) {
                    rec["dimension"] = s.dimension;
                    if (*basis) {
                        json b = json::array();
                        for (const PolyVectorField& fld : s.basis)
                            b.push_back(field_record(fld));
                        rec["basis"] = b;
                    }
                };
                if (*model == "projective") {
                    rec["m"] = *m;
                    emit_space(h0_tangent_projective(*m, *t));
                    return std::vector<json>{rec};
                }
                if (h->empty())
                    throw std::invalid_argument("--h is required for this model");
                HomogeneousPolynomial hp = parse_polynomial(*h, *vars);
                rec["h"] = hp.str();
                if (*model == "hypersurface") {
                    emit_space(h0_tangent_hypersurface(hp, *t));
                    return std::vector<json>{rec};
                }
                TangencyProblem tp;
                tp.h = hp;
                tp.t = *t;
                if (!f->empty()) {
                    tp.f = parse_polynomial(*f, *vars);
                } else if (*fdeg > 0) {
                    MilnorAlgebra ma(HypersurfaceSpec::from_polynomial(hp));
                    tp.f = general_divisor(ma, *fdeg, *seed);
                    rec["f_seed"] = *seed;
                } else {
                    throw std::invalid_argument(
                        "restricted models need --f or --f-degree");
                }
                rec["f"] = tp.f->str();
                if (*model == "restricted") {
                    emit_space(h0_tangent_restricted(tp));
                } else {
                    RestrictionReport rr = restriction_surjectivity(tp);
                    rec["surjective"] = rr.surjective;
                    rec["dim_on_y"] = rr.dim_on_y;
                    rec["dim_on_x"] = rr.dim_on_x;
                    rec["rank"] = rr.rank;
                }
                return std::vector<json>{rec};
            };
        });
    }

    // ---------------------------------------------------------------- extend
    {
        auto* cmd = app.add_subcommand(
            "extend",
            "extend a vector field tangent along X to one tangent along Y");
        cmd->set_help_flag("--help", "print help");
        auto vars = std::make_shared<int>(5);
        auto h = std::make_shared<std::string>();
        auto f = std::make_shared<std::string>();
        auto t = std::make_shared<int>(0);
        auto comps = std::make_shared<std::vector<std::string>>();
        cmd->add_option("--vars", *vars)->required();
        cmd->add_option("--h", *h, "hypersurface polynomial")->required();
        cmd->add_option("--f", *f, "divisor polynomial")->required();
        cmd->add_option("--t", *t, "twist")->required();
        cmd->add_option("--component", *comps,
                        "field components, one flag per variable")
            ->required();
        cmd->callback([&action, vars, h, f, t, comps] {
            action = [vars, h, f, t, comps] {
                TangencyProblem tp;
                tp.h = parse_polynomial(*h, *vars);
                tp.f = parse_polynomial(*f, *vars);
                tp.t = *t;
                std::vector<HomogeneousPolynomial> cs;
                for (const std::string& c : *comps)
                    cs.push_back(parse_polynomial(c, *vars));
                PolyVectorField field = PolyVectorField::make(cs, *t);
                json rec = base_record("extend");
                rec["t"] = *t;
                auto lifted = extend_section(tp, field);
                rec["extended"] = lifted.has_value();
                if (lifted) rec["field"] = field_record(*lifted);
                return std::vector<json>{rec};
            };
        });
    }

    // -------------------------------------------------------------- delpezzo
    {
        auto* cmd = app.add_subcommand(
            "delpezzo", "Picard-lattice computations for plane blow-ups");
        cmd->require_subcommand(1);

        auto* lines = cmd->add_subcommand(
            "lines", "the 27 lines on the six-point blow-up");
        lines->callback([&action] {
            action = [] {
                PicardLattice lat = PicardLattice::make(6);
                std::vector<DivisorClass> ls = enumerate_lines(lat);
                LineFamilies fam = classify_lines(ls);
                json rec = base_record("delpezzo-lines");
                rec["count"] = ls.size();
                rec["families"] = fam;
                json rows = json::array();
                for (const DivisorClass& d : ls) rows.push_back(d);
                rec["rows"] = rows;
                return std::vector<json>{rec};
            };
        });

        auto* degree = cmd->add_subcommand("degree", "K^2 = 9 - r");
        auto r = std::make_shared<int>(6);
        degree->add_option("--r", *r, "number of blown-up points")->required();
        degree->callback([&action, r] {
            action = [r] {
                PicardLattice lat = PicardLattice::make(*r);
                json rec = base_record("delpezzo-degree");
                rec["r"] = *r;
                rec["degree"] = surface_degree(lat);
                return std::vector<json>{rec};
            };
        });

        auto* p63 = cmd->add_subcommand(
            "prop63",
            "candidate subsheaf classes with K.c1 = 2 after the elimination "
            "chain");
        auto exclude = std::make_shared<bool>(false);
        p63->add_flag("--exclude", *exclude,
                      "also apply the explicit-form exclusion");
        p63->callback([&action, exclude] {
            action = [exclude] {
                std::vector<DivisorClass> got = prop63_search(*exclude);
                json rec = base_record("delpezzo-prop63");
                rec["exclusion_applied"] = *exclude;
                rec["count"] = got.size();
                json rows = json::array();
                for (const DivisorClass& d : got) rows.push_back(d);
                rec["rows"] = rows;
                return std::vector<json>{rec};
            };
        });

        auto* onef = cmd->add_subcommand(
            "oneforms", "space of twisted one forms on the plane");
        auto a = std::make_shared<int>(2);
        auto showbasis = std::make_shared<bool>(false);
        onef->add_option("--a", *a, "twist")->required();
        onef->add_flag("--basis", *showbasis);
        onef->callback([&action, a, showbasis] {
            action = [a, showbasis] {
                OneFormSpace sp = projective_one_forms(*a);
                json rec = base_record("delpezzo-oneforms");
                rec["a"] = *a;
                rec["dimension"] = sp.dimension;
                if (*showbasis) {
                    json b = json::array();
                    for (const ProjectiveOneForm& w : sp.basis) {
                        json comps = json::array();
                        for (const HomogeneousPolynomial& g : w.g)
                            comps.push_back(g.str());
                        b.push_back(comps);
                    }
                    rec["basis"] = b;
                }
                return std::vector<json>{rec};
            };
        });

        auto* zeros = cmd->add_subcommand(
            "zeros", "zero locus of a one form by bounded rational search");
        auto form = std::make_shared<std::string>("fourpoint");
        auto g0 = std::make_shared<std::string>();
        auto g1 = std::make_shared<std::string>();
        auto g2 = std::make_shared<std::string>();
        zeros->add_option("--form", *form, "pencil | fourpoint | custom")
            ->check(CLI::IsMember({"pencil", "fourpoint", "custom"}));
        zeros->add_option("--g0", *g0, "component (custom form)");
        zeros->add_option("--g1", *g1, "component (custom form)");
        zeros->add_option("--g2", *g2, "component (custom form)");
        zeros->callback([&action, form, g0, g1, g2] {
            action = [form, g0, g1, g2] {
                ProjectiveOneForm w =
                    *form == "pencil" ? pencil_form()
                    : *form == "fourpoint"
                        ? four_point_form()
                        : ProjectiveOneForm::make(
                              {parse_polynomial(*g0, 3),
                               parse_polynomial(*g1, 3),
                               parse_polynomial(*g2, 3)});
                ZeroLocusReport zr = zeros_of_form(w);
                json rec = base_record("delpezzo-zeros");
                rec["twist"] = w.twist;
                rec["scheme_degree"] = zr.scheme_degree;
                rec["complete"] = zr.complete;
                json pts = json::array();
                for (const PlanePoint& p : zr.points)
                    pts.push_back(point_display(p));
                rec["points"] = pts;
                return std::vector<json>{rec};
            };
        });
    }

    // let --format/--out appear after the subcommand as well
    auto all = [](const CLI::App*) { return true; };
    for (CLI::App* sc : app.get_subcommands(all)) {
        sc->fallthrough();
        for (CLI::App* sub : sc->get_subcommands(all)) sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        emit_all(action(), out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
