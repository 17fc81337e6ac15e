#pragma once

// Shared fixtures: the hospital sample document, its identifiers, the
// subject hierarchy and the policy exercised across the suites.

#include <string>

#include "xsecdb/document.hpp"
#include "xsecdb/label_tree.hpp"
#include "xsecdb/policy.hpp"
#include "xsecdb/xml.hpp"

namespace fixtures {

using xsecdb::BigInt;
using xsecdb::Document;
using xsecdb::LabelTree;
using xsecdb::NodeId;
using xsecdb::Rational;

inline constexpr const char* kHospitalXml = R"(<patients>
  <franck>
    <service>otolarynology</service>
    <diagnosis>tonsillitis</diagnosis>
  </franck>
  <robert>
    <service>pneumology</service>
    <diagnosis>penumonia</diagnosis>
  </robert>
</patients>
)";

inline constexpr const char* kSubjectsText = R"(subject staff
subject secretary
subject doctor
subject epidemiologist
subject patient
subject beaufort
subject laporte
subject richard
subject robert
subject franck
isa secretary staff
isa doctor staff
isa epidemiologist staff
isa laporte doctor
isa beaufort secretary
isa richard epidemiologist
isa robert patient
isa franck patient
)";

inline constexpr const char* kHospitalPolicyText = R"(10 accept read //* staff
11 deny read //diagnosis/* secretary
12 accept position //diagnosis/* secretary
13 accept read /patients patient
14 accept read /patients/descendant-or-self::*[$USER] patient
15 deny read /patients/* epidemiologist
16 accept position /patients/* epidemiologist
17 accept insert /patients secretary
18 accept update /patients/* secretary
19 accept insert //diagnosis doctor
20 accept update //diagnosis/* doctor
21 accept delete //diagnosis/* doctor
)";

inline Rational rat(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

inline NodeId n1() { return NodeId::root(); }                       // patients
inline NodeId n2() { return NodeId(1, rat(1, 1), rat(1, 1)); }      // franck
inline NodeId n7() { return NodeId(1, rat(1, 1), rat(2, 1)); }      // robert
inline NodeId n3() { return NodeId(2, rat(1, 1), rat(1, 1)); }      // franck/service
inline NodeId n5() { return NodeId(2, rat(1, 1), rat(2, 1)); }      // franck/diagnosis
inline NodeId n8() { return NodeId(2, rat(2, 1), rat(3, 1)); }      // robert/service
inline NodeId n10() { return NodeId(2, rat(2, 1), rat(4, 1)); }     // robert/diagnosis
inline NodeId n4() { return NodeId(3, rat(1, 1), rat(1, 1)); }      // otolarynology
inline NodeId n6() { return NodeId(3, rat(2, 1), rat(2, 1)); }      // tonsillitis
inline NodeId n9() { return NodeId(3, rat(3, 1), rat(3, 1)); }      // pneumology
inline NodeId n11() { return NodeId(3, rat(4, 1), rat(4, 1)); }     // penumonia

inline Document hospital() { return xsecdb::ingest_xml(kHospitalXml); }

inline xsecdb::SubjectGraph hospital_subjects() {
  return xsecdb::load_subjects(kSubjectsText);
}

inline std::vector<xsecdb::Rule> hospital_policy(const xsecdb::SubjectGraph& graph) {
  return xsecdb::load_policy(kHospitalPolicyText, graph);
}

inline LabelTree albert_tree() {
  return LabelTree{
      "albert",
      {LabelTree{"service", {LabelTree{"cardiology", {}}}},
       LabelTree{"diagnosis", {}}}};
}

// Identifiers the albert insertion must produce.
inline NodeId albert_id() { return NodeId(1, rat(1, 1), rat(3, 2)); }
inline NodeId albert_service_id() { return NodeId(2, rat(3, 2), rat(7, 3)); }
inline NodeId albert_diagnosis_id() { return NodeId(2, rat(3, 2), rat(8, 3)); }
inline NodeId albert_cardiology_id() { return NodeId(3, rat(7, 3), rat(5, 2)); }

}  // namespace fixtures
