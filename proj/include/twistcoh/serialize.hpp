#pragma once

#include <json.hpp>

#include "twistcoh/cohomology.hpp"
#include "twistcoh/delpezzo.hpp"
#include "twistcoh/milnor.hpp"
#include "twistcoh/stability.hpp"
#include "twistcoh/vanishing.hpp"
#include "twistcoh/vectorfields.hpp"

// JSON bindings for the result types the CLI emits.  Numbers that can exceed
// machine range (big integers, rationals) travel as decimal strings so the
// round trip is lossless.  All pairs below satisfy from_json(to_json(x)) == x.

namespace twistcoh {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const Monomial& m);
void from_json(const nlohmann::json& j, Monomial& m);

void to_json(nlohmann::json& j, const HomogeneousPolynomial& p);
void from_json(const nlohmann::json& j, HomogeneousPolynomial& p);

void to_json(nlohmann::json& j, const HSSDescriptor& d);
void from_json(const nlohmann::json& j, HSSDescriptor& d);

void to_json(nlohmann::json& j, const CnSequence& s);
void from_json(const nlohmann::json& j, CnSequence& s);

void to_json(nlohmann::json& j, const CohomologyAnswer& a);
void from_json(const nlohmann::json& j, CohomologyAnswer& a);

void to_json(nlohmann::json& j, const CompleteIntersectionSpec& s);
void from_json(const nlohmann::json& j, CompleteIntersectionSpec& s);

void to_json(nlohmann::json& j, const AppliedRule& r);
void from_json(const nlohmann::json& j, AppliedRule& r);

void to_json(nlohmann::json& j, const VanishingCertificate& c);
void from_json(const nlohmann::json& j, VanishingCertificate& c);

void to_json(nlohmann::json& j, const KoszulWitness& w);
void from_json(const nlohmann::json& j, KoszulWitness& w);

void to_json(nlohmann::json& j, const StabilityVerdict& v);
void from_json(const nlohmann::json& j, StabilityVerdict& v);

void to_json(nlohmann::json& j, const Prop52TestSet& t);
void from_json(const nlohmann::json& j, Prop52TestSet& t);

void to_json(nlohmann::json& j, const SlpCheck& c);
void from_json(const nlohmann::json& j, SlpCheck& c);

void to_json(nlohmann::json& j, const PolyVectorField& f);
void from_json(const nlohmann::json& j, PolyVectorField& f);

void to_json(nlohmann::json& j, const SectionSpace& s);
void from_json(const nlohmann::json& j, SectionSpace& s);

void to_json(nlohmann::json& j, const RestrictionReport& r);
void from_json(const nlohmann::json& j, RestrictionReport& r);

void to_json(nlohmann::json& j, const DivisorClass& d);
void from_json(const nlohmann::json& j, DivisorClass& d);

void to_json(nlohmann::json& j, const LineFamilies& f);
void from_json(const nlohmann::json& j, LineFamilies& f);

void to_json(nlohmann::json& j, const ProjectiveOneForm& w);
void from_json(const nlohmann::json& j, ProjectiveOneForm& w);

void to_json(nlohmann::json& j, const PlanePoint& p);
void from_json(const nlohmann::json& j, PlanePoint& p);

void to_json(nlohmann::json& j, const ZeroLocusReport& r);
void from_json(const nlohmann::json& j, ZeroLocusReport& r);

// Enum spellings shared by the bindings and the CLI.
std::string family_name(Family f);
Family family_from_name(const std::string& s);
std::string status_name(CohomologyStatus s);
CohomologyStatus status_from_name(const std::string& s);
std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& s);
std::string stability_name(Stability s);
Stability stability_from_name(const std::string& s);

}  // namespace twistcoh
