#include "twistcoh/serialize.hpp"

#include <stdexcept>

namespace twistcoh {

using nlohmann::json;

// ---------------------------------------------------------------- enum names

std::string family_name(Family f) {
    switch (f) {
        case Family::projective_space: return "projective_space";
        case Family::quadric: return "quadric";
        case Family::lagrangian_grassmannian: return "lagrangian_grassmannian";
        case Family::other: return "other";
    }
    throw std::logic_error("family_name: bad enum");
}

Family family_from_name(const std::string& s) {
    if (s == "projective_space") return Family::projective_space;
    if (s == "quadric") return Family::quadric;
    if (s == "lagrangian_grassmannian") return Family::lagrangian_grassmannian;
    if (s == "other") return Family::other;
    throw std::invalid_argument("unknown family: " + s);
}

std::string status_name(CohomologyStatus s) {
    switch (s) {
        case CohomologyStatus::dimension: return "dimension";
        case CohomologyStatus::zero: return "zero";
        case CohomologyStatus::possibly_nonzero: return "possibly_nonzero";
    }
    throw std::logic_error("status_name: bad enum");
}

CohomologyStatus status_from_name(const std::string& s) {
    if (s == "dimension") return CohomologyStatus::dimension;
    if (s == "zero") return CohomologyStatus::zero;
    if (s == "possibly_nonzero") return CohomologyStatus::possibly_nonzero;
    throw std::invalid_argument("unknown status: " + s);
}

std::string verdict_name(Verdict v) {
    return v == Verdict::MustVanish ? "MustVanish" : "PossiblyNonzero";
}

Verdict verdict_from_name(const std::string& s) {
    if (s == "MustVanish") return Verdict::MustVanish;
    if (s == "PossiblyNonzero") return Verdict::PossiblyNonzero;
    throw std::invalid_argument("unknown verdict: " + s);
}

std::string stability_name(Stability s) {
    switch (s) {
        case Stability::Stable: return "Stable";
        case Stability::Semistable: return "Semistable";
        case Stability::Unstable: return "Unstable";
        case Stability::Unknown: return "Unknown";
    }
    throw std::logic_error("stability_name: bad enum");
}

Stability stability_from_name(const std::string& s) {
    if (s == "Stable") return Stability::Stable;
    if (s == "Semistable") return Stability::Semistable;
    if (s == "Unstable") return Stability::Unstable;
    if (s == "Unknown") return Stability::Unknown;
    throw std::invalid_argument("unknown stability: " + s);
}

// ------------------------------------------------------------------- scalars

void to_json(json& j, const Rational& r) { j = r.str(); }
void from_json(const json& j, Rational& r) {
    r = Rational::parse(j.get<std::string>());
}

void to_json(json& j, const Monomial& m) { j = m.e; }
void from_json(const json& j, Monomial& m) {
    m = Monomial(j.get<std::vector<int>>());
}

void to_json(json& j, const HomogeneousPolynomial& p) {
    json terms = json::array();
    for (const auto& [mono, c] : p.terms()) terms.push_back(json{mono, c});
    j = json{{"vars", p.num_vars()}, {"degree", p.degree()}, {"terms", terms}};
}

void from_json(const json& j, HomogeneousPolynomial& p) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const json& t : j.at("terms"))
        terms.emplace_back(t.at(0).get<Monomial>(), t.at(1).get<Rational>());
    p = HomogeneousPolynomial::from_terms(j.at("vars").get<int>(),
                                          j.at("degree").get<int>(), terms);
}

// ---------------------------------------------------------------- cohomology

void to_json(json& j, const HSSDescriptor& d) {
    j = json{{"family", family_name(d.family)},
             {"dimension", d.dimension},
             {"index", d.index},
             {"cn_rank", d.cn_rank},
             {"assume_irreducible_hss", d.assume_irreducible_hss}};
}

void from_json(const json& j, HSSDescriptor& d) {
    d.family = family_from_name(j.at("family").get<std::string>());
    j.at("dimension").get_to(d.dimension);
    j.at("index").get_to(d.index);
    j.at("cn_rank").get_to(d.cn_rank);
    j.at("assume_irreducible_hss").get_to(d.assume_irreducible_hss);
}

void to_json(json& j, const CnSequence& s) {
    j = json{{"entries", s.entries},
             {"level", s.level},
             {"weight", s.weight},
             {"cohomological_degree", s.cohomological_degree}};
}

void from_json(const json& j, CnSequence& s) {
    j.at("entries").get_to(s.entries);
    j.at("level").get_to(s.level);
    j.at("weight").get_to(s.weight);
    j.at("cohomological_degree").get_to(s.cohomological_degree);
}

void to_json(json& j, const CohomologyAnswer& a) {
    j = json{{"status", status_name(a.status)},
             {"dimension", a.dim.get_str()},
             {"certificate", a.certificate}};
}

void from_json(const json& j, CohomologyAnswer& a) {
    a.status = status_from_name(j.at("status").get<std::string>());
    a.dim = Int(j.at("dimension").get<std::string>());
    j.at("certificate").get_to(a.certificate);
}

// ----------------------------------------------------------------- vanishing

void to_json(json& j, const CompleteIntersectionSpec& s) {
    j = json{{"ambient", s.ambient}, {"degrees", s.degrees}};
}

void from_json(const json& j, CompleteIntersectionSpec& s) {
    s = CompleteIntersectionSpec::make(j.at("ambient").get<HSSDescriptor>(),
                                       j.at("degrees").get<std::vector<int>>());
}

void to_json(json& j, const AppliedRule& r) {
    json params = json::array();
    for (const auto& [k, v] : r.params) params.push_back(json{k, v});
    j = json{{"rule", r.rule}, {"params", params}};
}

void from_json(const json& j, AppliedRule& r) {
    j.at("rule").get_to(r.rule);
    r.params.clear();
    for (const json& p : j.at("params"))
        r.params.emplace_back(p.at(0).get<std::string>(),
                              p.at(1).get<std::string>());
}

void to_json(json& j, const VanishingCertificate& c) {
    j = json{{"verdict", verdict_name(c.verdict)},
             {"reason_chain", c.reason_chain}};
}

void from_json(const json& j, VanishingCertificate& c) {
    c.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    j.at("reason_chain").get_to(c.reason_chain);
}

void to_json(json& j, const KoszulWitness& w) {
    j = json{{"kind", w.kind == KoszulWitness::Case::line_bundle
                          ? "line_bundle"
                          : "ambient_form"},
             {"j", w.j},
             {"p_prime", w.p_prime},
             {"q_prime", w.q_prime},
             {"s", w.s},
             {"twist", w.twist}};
}

void from_json(const json& j, KoszulWitness& w) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "line_bundle") w.kind = KoszulWitness::Case::line_bundle;
    else if (kind == "ambient_form") w.kind = KoszulWitness::Case::ambient_form;
    else throw std::invalid_argument("unknown witness kind: " + kind);
    j.at("j").get_to(w.j);
    j.at("p_prime").get_to(w.p_prime);
    j.at("q_prime").get_to(w.q_prime);
    j.at("s").get_to(w.s);
    j.at("twist").get_to(w.twist);
}

// ----------------------------------------------------------------- stability

void to_json(json& j, const StabilityVerdict& v) {
    j = json{{"verdict", stability_name(v.verdict)},
             {"certificate", v.certificate},
             {"relied_on_flags", v.relied_on_flags},
             {"condition_report", v.condition_report}};
    if (v.destabilizer_hint) j["destabilizer_hint"] = *v.destabilizer_hint;
    else j["destabilizer_hint"] = nullptr;
}

void from_json(const json& j, StabilityVerdict& v) {
    v.verdict = stability_from_name(j.at("verdict").get<std::string>());
    j.at("certificate").get_to(v.certificate);
    j.at("relied_on_flags").get_to(v.relied_on_flags);
    j.at("condition_report").get_to(v.condition_report);
    if (j.at("destabilizer_hint").is_null()) v.destabilizer_hint.reset();
    else v.destabilizer_hint = j.at("destabilizer_hint").get<std::string>();
}

void to_json(json& j, const Prop52TestSet& t) {
    j = json{{"t_max", t.t_max}, {"justification", t.justification}};
}

void from_json(const json& j, Prop52TestSet& t) {
    j.at("t_max").get_to(t.t_max);
    j.at("justification").get_to(t.justification);
}

// -------------------------------------------------------------------- milnor

void to_json(json& j, const SlpCheck& c) {
    j = json{{"has_slp", c.has_slp},
             {"witness", c.witness},
             {"attempts", c.attempts},
             {"power_bound", c.power_bound},
             {"socle_degree", c.socle_degree}};
}

void from_json(const json& j, SlpCheck& c) {
    j.at("has_slp").get_to(c.has_slp);
    j.at("witness").get_to(c.witness);
    j.at("attempts").get_to(c.attempts);
    j.at("power_bound").get_to(c.power_bound);
    j.at("socle_degree").get_to(c.socle_degree);
}

// ------------------------------------------------------------- vector fields

void to_json(json& j, const PolyVectorField& f) {
    j = json{{"components", f.components}, {"twist", f.twist}};
}

void from_json(const json& j, PolyVectorField& f) {
    f = PolyVectorField::make(
        j.at("components").get<std::vector<HomogeneousPolynomial>>(),
        j.at("twist").get<int>());
}

void to_json(json& j, const SectionSpace& s) {
    j = json{{"dimension", s.dimension}, {"basis", s.basis}};
}

void from_json(const json& j, SectionSpace& s) {
    j.at("dimension").get_to(s.dimension);
    j.at("basis").get_to(s.basis);
}

void to_json(json& j, const RestrictionReport& r) {
    j = json{{"surjective", r.surjective},
             {"dim_on_y", r.dim_on_y},
             {"dim_on_x", r.dim_on_x},
             {"rank", r.rank}};
}

void from_json(const json& j, RestrictionReport& r) {
    j.at("surjective").get_to(r.surjective);
    j.at("dim_on_y").get_to(r.dim_on_y);
    j.at("dim_on_x").get_to(r.dim_on_x);
    j.at("rank").get_to(r.rank);
}

// ----------------------------------------------------------------- del Pezzo

void to_json(json& j, const DivisorClass& d) {
    j = json{{"a", d.a}, {"b", d.b}};
}

void from_json(const json& j, DivisorClass& d) {
    j.at("a").get_to(d.a);
    j.at("b").get_to(d.b);
}

void to_json(json& j, const LineFamilies& f) {
    j = json{{"exceptional", f.exceptional},
             {"between_points", f.between_points},
             {"conics", f.conics}};
}

void from_json(const json& j, LineFamilies& f) {
    j.at("exceptional").get_to(f.exceptional);
    j.at("between_points").get_to(f.between_points);
    j.at("conics").get_to(f.conics);
}

void to_json(json& j, const ProjectiveOneForm& w) {
    j = json{{"components", w.g}, {"twist", w.twist}};
}

void from_json(const json& j, ProjectiveOneForm& w) {
    w = ProjectiveOneForm::make(
        j.at("components").get<std::vector<HomogeneousPolynomial>>());
    if (w.twist != j.at("twist").get<int>())
        throw std::invalid_argument("one form: recorded twist disagrees");
}

void to_json(json& j, const PlanePoint& p) { j = json{{"coords", p.coords}}; }

void from_json(const json& j, PlanePoint& p) {
    j.at("coords").get_to(p.coords);
}

void to_json(json& j, const ZeroLocusReport& r) {
    j = json{{"points", r.points},
             {"scheme_degree", r.scheme_degree},
             {"complete", r.complete}};
}

void from_json(const json& j, ZeroLocusReport& r) {
    j.at("points").get_to(r.points);
    j.at("scheme_degree").get_to(r.scheme_degree);
    j.at("complete").get_to(r.complete);
}

}  // namespace twistcoh
