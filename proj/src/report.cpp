#include "lsx/report.hpp"

namespace lsx {

Json report_skeleton(const std::string& command) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  return j;
}

void attach_timing(Json& report, double elapsed_ms) { report["timing_ms"] = elapsed_ms; }

Json json_of_structure(const LogicalStructure& s, const std::string& name) {
  Json j;
  j["name"] = name;
  j["elements"] = s.n;
  j["origin"] = s.origin;
  j["digest"] = s.digest();
  return j;
}

Json json_of_witness(const Witness& w) {
  Json j;
  if (w.gamma) j["gamma"] = format_subset(*w.gamma);
  if (w.sigma) j["sigma"] = format_subset(*w.sigma);
  if (w.alpha) j["alpha"] = *w.alpha;
  if (w.beta) j["beta"] = *w.beta;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json json_of_classification(const ClassificationReport& r) {
  Json verdicts;
  for (const auto& name : ClassificationReport::verdict_order()) {
    verdicts[name] = r.verdict(name);
  }
  Json witnesses = Json::array();
  for (const auto& name : ClassificationReport::verdict_order()) {
    auto it = r.witnesses.find(name);
    if (it == r.witnesses.end()) continue;
    Json w;
    w["verdict"] = name;
    w["witness"] = json_of_witness(it->second);
    witnesses.push_back(std::move(w));
  }
  Json j;
  j["verdicts"] = std::move(verdicts);
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json json_of_compare(const CompareReport& r) {
  Json j;
  j["sound"] = r.sound;
  j["complete"] = r.complete;
  j["empty_family"] = r.empty_family;
  if (r.sound_gap) {
    j["sound_gap"] = {{"gamma", format_subset(r.sound_gap->gamma)},
                      {"alpha", r.sound_gap->alpha}};
  }
  if (r.complete_gap) {
    j["complete_gap"] = {{"gamma", format_subset(r.complete_gap->gamma)},
                         {"alpha", r.complete_gap->alpha}};
  }
  return j;
}

Json json_of_named_valuations(const NamedBivaluationSet& v) {
  Json j;
  j["kind"] = valuation_family_name(v.kind);
  j["size"] = v.valuations.size();
  Json vals = Json::array();
  for (Mask m : v.valuations) vals.push_back(format_subset(m));
  j["valuations"] = std::move(vals);
  if (!v.buckets.empty()) {
    Json buckets = Json::array();
    for (const auto& b : v.buckets) {
      Json jb;
      jb["beta"] = b.beta;
      jb["alpha"] = b.alpha;
      Json members = Json::array();
      for (Mask m : b.members) members.push_back(format_subset(m));
      jb["members"] = std::move(members);
      buckets.push_back(std::move(jb));
    }
    j["buckets"] = std::move(buckets);
  }
  return j;
}

Json json_of_registry(const RegistryReport& r) {
  Json j;
  j["items"] = r.items;
  Json stats = Json::array();
  for (const auto& st : r.stats) {
    Json s;
    s["id"] = st.id;
    s["summary"] = st.summary;
    s["hypothesis_satisfied"] = st.hypothesis_satisfied;
    s["conclusions_checked"] = st.conclusions_checked;
    s["failures"] = st.failures;
    stats.push_back(std::move(s));
  }
  j["theorems"] = std::move(stats);
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    Json jf;
    jf["theorem"] = f.theorem_id;
    jf["item"] = f.item_label;
    jf["witness"] = f.witness;
    jf["carrier"] = f.original_carrier;
    jf["minimized_carrier"] = f.minimized_carrier;
    fails.push_back(std::move(jf));
  }
  j["failures"] = std::move(fails);
  j["uncovered"] = r.uncovered();
  j["all_passed"] = r.all_passed();
  return j;
}

Json json_of_claims(const gallery::ClaimReport& r) {
  Json j;
  j["gallery"] = r.gallery_id;
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json jc;
    jc["id"] = c.id;
    jc["description"] = c.description;
    jc["discharge"] = gallery::discharge_name(c.discharge);
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    claims.push_back(std::move(jc));
  }
  j["claims"] = std::move(claims);
  j["all_pass"] = r.all_pass();
  return j;
}

}  // namespace lsx
