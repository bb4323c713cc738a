// Command-line front end: classify structures, check properties, enumerate
// subsets, verify the theorem registry over structures or random corpora,
// run the gallery claim scripts, and extract valuation families.
//
// Exit codes: 0 = all checks pass, 1 = a counterexample or claim failure was
// found (the report carries witnesses), 2 = usage, parse, or budget error.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsx/format.hpp"
#include "lsx/report.hpp"

namespace {

using namespace lsx;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string echo_command(int argc, char** argv) {
  std::ostringstream out;
  for (int i = 1; i < argc; ++i) out << (i > 1 ? " " : "") << argv[i];
  return out.str();
}

Mask parse_gamma(const std::string& text, int n) {
  if (text == "empty") return 0;
  Mask out = 0;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) fail(ErrorKind::Parse, "empty element in subset '" + text + "'");
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        fail(ErrorKind::Parse, "bad element '" + part + "' in subset");
      }
    }
    const int e = std::stoi(part);
    if (e >= n) {
      fail(ErrorKind::Parse,
           "element " + part + " outside carrier of size " + std::to_string(n));
    }
    out |= element_bit(e);
  }
  return out;
}

std::vector<std::string> parse_theorem_ids(const std::string& text) {
  if (text == "all") return {};
  std::vector<std::string> ids;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) ids.push_back(part);
  }
  if (ids.empty()) fail(ErrorKind::Domain, "no theorem ids given");
  return ids;
}

void emit(const Json& report, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

struct CheckArgs {
  std::string file, property, gamma, arrow_file;
  std::optional<int> alpha;
  bool json = false;
};

int run_check(const CheckArgs& args, const std::string& command) {
  Timer timer;
  const StructureFile sf = load_structure_file(args.file);
  const LogicalStructure s = to_structure(sf);
  std::optional<ArrowTable> arrow;
  if (!args.arrow_file.empty()) arrow = load_arrow_file(args.arrow_file);

  CheckResult result;
  std::string subject;
  if (auto tag = structure_property_tag_from_name(args.property)) {
    StructureProperty prop{*tag};
    if (*tag == StructureProperty::Tag::ModusPonens) {
      if (!arrow) fail(ErrorKind::Domain, "modus-ponens needs --arrow FILE");
      prop.arrow = &*arrow;
    }
    result = check_structure(s, prop);
    subject = "structure";
  } else if (auto set_tag = set_property_tag_from_name(args.property)) {
    if (args.gamma.empty()) fail(ErrorKind::Domain, "set properties need --gamma SET");
    SetProperty prop{*set_tag};
    if (*set_tag == SetProperty::Tag::AlphaSaturated ||
        *set_tag == SetProperty::Tag::RelativelyMaximal ||
        *set_tag == SetProperty::Tag::MaximalAlphaSaturated) {
      if (!args.alpha) fail(ErrorKind::Domain, args.property + " needs --alpha K");
      prop.alpha = *args.alpha;
    }
    if (*set_tag == SetProperty::Tag::ArrowSaturated) {
      if (!arrow) fail(ErrorKind::Domain, "arrow-saturated needs --arrow FILE");
      prop.arrow = &*arrow;
    }
    const Mask gamma = parse_gamma(args.gamma, s.n);
    result = check_set(s, prop, gamma);
    subject = "gamma=" + format_subset(gamma);
  } else {
    fail(ErrorKind::Domain, "unknown property '" + args.property + "'");
  }

  Json report = report_skeleton(command);
  report["structure"] = json_of_structure(s, sf.name);
  report["property"] = args.property;
  report["subject"] = subject;
  report["holds"] = result.holds;
  if (result.witness) report["witness"] = json_of_witness(*result.witness);
  attach_timing(report, timer.ms());

  std::ostringstream text;
  text << sf.name << ": " << args.property << " on " << subject << ": "
       << (result.holds ? "holds" : "fails") << "\n";
  if (result.witness) text << "  witness: " << result.witness->to_string() << "\n";
  emit(report, args.json, text.str());
  return result.holds ? kExitPass : kExitCounterexample;
}

int run_classify(const std::string& file, bool json, const std::string& command) {
  Timer timer;
  const StructureFile sf = load_structure_file(file);
  const LogicalStructure s = to_structure(sf);
  const ClassificationReport r = classify(s);

  Json report = report_skeleton(command);
  report["structure"] = json_of_structure(s, sf.name);
  report.update(json_of_classification(r));
  attach_timing(report, timer.ms());

  std::ostringstream text;
  text << sf.name << " (" << s.n << " elements):\n";
  for (const auto& name : ClassificationReport::verdict_order()) {
    text << "  " << name << ": " << (r.verdict(name) ? "yes" : "no");
    auto it = r.witnesses.find(name);
    if (it != r.witnesses.end()) text << "  [" << it->second.to_string() << "]";
    text << "\n";
  }
  emit(report, json, text.str());
  return kExitPass;
}

struct EnumerateArgs {
  std::string file, kind, arrow_file;
  std::optional<int> alpha;
  bool json = false;
};

int run_enumerate(const EnumerateArgs& args, const std::string& command) {
  Timer timer;
  const StructureFile sf = load_structure_file(args.file);
  const LogicalStructure s = to_structure(sf);
  std::optional<ArrowTable> arrow;
  if (!args.arrow_file.empty()) arrow = load_arrow_file(args.arrow_file);

  auto tag = set_property_tag_from_name(args.kind);
  if (!tag) fail(ErrorKind::Domain, "unknown set property '" + args.kind + "'");
  SetProperty prop{*tag};
  if (*tag == SetProperty::Tag::AlphaSaturated || *tag == SetProperty::Tag::RelativelyMaximal ||
      *tag == SetProperty::Tag::MaximalAlphaSaturated) {
    if (!args.alpha) fail(ErrorKind::Domain, args.kind + " needs --alpha K");
    prop.alpha = *args.alpha;
  }
  if (*tag == SetProperty::Tag::ArrowSaturated) {
    if (!arrow) fail(ErrorKind::Domain, "arrow-saturated needs --arrow FILE");
    prop.arrow = &*arrow;
  }
  const std::vector<Mask> sets = enumerate_sets(s, prop);

  Json report = report_skeleton(command);
  report["structure"] = json_of_structure(s, sf.name);
  report["kind"] = args.kind;
  Json arr = Json::array();
  for (Mask m : sets) arr.push_back(format_subset(m));
  report["sets"] = std::move(arr);
  report["count"] = sets.size();
  attach_timing(report, timer.ms());

  std::ostringstream text;
  text << sf.name << ": " << sets.size() << " subset(s) with " << args.kind << "\n";
  for (Mask m : sets) text << "  " << format_subset(m) << "\n";
  emit(report, args.json, text.str());
  return kExitPass;
}

std::string registry_text(const RegistryReport& r) {
  std::ostringstream text;
  text << r.items << " structure(s) checked\n";
  for (const auto& st : r.stats) {
    text << "  " << st.id << ": hypothesis " << st.hypothesis_satisfied << ", conclusions "
         << st.conclusions_checked << ", failures " << st.failures << "\n";
  }
  for (const auto& f : r.failures) {
    text << "  FAIL " << f.theorem_id << " on " << f.item_label << ": " << f.witness
         << " (minimized carrier " << f.minimized_carrier << ")\n";
  }
  const auto uncovered = r.uncovered();
  if (!uncovered.empty()) {
    text << "  uncovered:";
    for (const auto& id : uncovered) text << " " << id;
    text << "\n";
  }
  text << (r.all_passed() ? "all theorems passed" : "FAILURES FOUND") << "\n";
  return text.str();
}

int run_verify(const std::string& file, const std::string& theorems,
               const std::string& arrow_file, bool json, const std::string& command) {
  Timer timer;
  const StructureFile sf = load_structure_file(file);
  CorpusItem item;
  item.structure = to_structure(sf);
  item.label = sf.name;
  item.arrows.push_back(arrow_second_projection(item.structure.n));
  item.arrows.push_back(arrow_constant(item.structure.n, 0));
  if (!arrow_file.empty()) item.arrows.push_back(load_arrow_file(arrow_file));

  RegistryOptions opts;
  opts.ids = parse_theorem_ids(theorems);
  const RegistryReport r = run_registry({item}, opts);

  Json report = report_skeleton(command);
  report["structure"] = json_of_structure(item.structure, sf.name);
  report.update(json_of_registry(r));
  attach_timing(report, timer.ms());
  emit(report, json, registry_text(r));
  return r.all_passed() ? kExitPass : kExitCounterexample;
}

struct CorpusArgs {
  std::string generator = "mixed";
  int count = 100;
  int size_min = 2;
  int size_max = 5;
  std::uint64_t seed = 0;
  std::string theorems = "all";
  bool exhibits = false;
  bool json = false;
};

int run_corpus(const CorpusArgs& args, const std::string& command) {
  Timer timer;
  std::vector<CorpusItem> corpus;
  if (args.generator == "mixed") {
    const int third = args.count / 3;
    auto extend = [&corpus](std::vector<CorpusItem> more) {
      for (auto& item : more) corpus.push_back(std::move(item));
    };
    extend(build_corpus(Strategy::Arbitrary, args.count - 2 * third, args.size_min,
                        args.size_max, args.seed));
    extend(build_corpus(Strategy::Monotone, third, args.size_min, args.size_max, args.seed));
    extend(build_corpus(Strategy::BivaluationInduced, third, args.size_min, args.size_max,
                        args.seed));
    extend(canonical_exhibits());
  } else {
    auto strategy = strategy_from_name(args.generator);
    if (!strategy) fail(ErrorKind::Domain, "unknown generator '" + args.generator + "'");
    corpus = build_corpus(*strategy, args.count, args.size_min, args.size_max, args.seed);
    if (args.exhibits) {
      for (auto& item : canonical_exhibits()) corpus.push_back(std::move(item));
    }
  }

  RegistryOptions opts;
  opts.ids = parse_theorem_ids(args.theorems);
  const RegistryReport r = run_registry(corpus, opts);

  Json report = report_skeleton(command);
  report["generator"] = args.generator;
  report["seed"] = args.seed;
  report.update(json_of_registry(r));
  attach_timing(report, timer.ms());
  emit(report, args.json, registry_text(r));
  return r.all_passed() ? kExitPass : kExitCounterexample;
}

int run_gallery_list(bool json, const std::string& command) {
  Timer timer;
  Json report = report_skeleton(command);
  Json items = Json::array();
  std::ostringstream text;
  for (const auto& id : gallery::gallery_ids()) {
    Json item;
    item["id"] = id;
    item["carrier"] = gallery::gallery_carrier(id);
    item["rule"] = gallery::gallery_rule(id);
    items.push_back(std::move(item));
    text << id << "\n  carrier: " << gallery::gallery_carrier(id)
         << "\n  rule: " << gallery::gallery_rule(id) << "\n";
  }
  report["galleries"] = std::move(items);
  attach_timing(report, timer.ms());
  emit(report, json, text.str());
  return kExitPass;
}

int run_gallery_run(const std::string& id, bool json, const std::string& command) {
  Timer timer;
  const gallery::ClaimReport r = gallery::run_claims(id);
  Json report = report_skeleton(command);
  report.update(json_of_claims(r));
  attach_timing(report, timer.ms());

  std::ostringstream text;
  text << r.gallery_id << ":\n";
  for (const auto& c : r.claims) {
    text << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << " ("
         << gallery::discharge_name(c.discharge) << "): " << c.description << "\n";
    if (!c.detail.empty()) text << "      " << c.detail << "\n";
  }
  text << (r.all_pass() ? "all claims pass" : "CLAIM FAILURES") << "\n";
  emit(report, json, text.str());
  return r.all_pass() ? kExitPass : kExitCounterexample;
}

struct BivalArgs {
  std::string file, emit_kind;
  bool compare = false;
  bool json = false;
};

int run_bival(const BivalArgs& args, const std::string& command) {
  Timer timer;
  const StructureFile sf = load_structure_file(args.file);
  const LogicalStructure s = to_structure(sf);
  auto family = valuation_family_from_name(args.emit_kind);
  if (!family) fail(ErrorKind::Domain, "unknown valuation family '" + args.emit_kind + "'");
  const NamedBivaluationSet v = extract(s, *family);

  Json report = report_skeleton(command);
  report["structure"] = json_of_structure(s, sf.name);
  report["family"] = json_of_named_valuations(v);

  std::ostringstream text;
  text << sf.name << ": " << valuation_family_name(*family) << " has " << v.valuations.size()
       << " valuation(s)\n";
  for (Mask m : v.valuations) text << "  chi_" << format_subset(m) << "\n";
  if (args.compare) {
    const CompareReport cmp = compare_valuations(s, v.valuations);
    report["compare"] = json_of_compare(cmp);
    text << "  sound: " << (cmp.sound ? "yes" : "no")
         << ", complete: " << (cmp.complete ? "yes" : "no");
    if (cmp.empty_family) text << " (empty family: total relation convention)";
    text << "\n";
    if (cmp.sound_gap) {
      text << "  soundness gap: " << format_subset(cmp.sound_gap->gamma) << " derives "
           << cmp.sound_gap->alpha << " only syntactically\n";
    }
    if (cmp.complete_gap) {
      text << "  completeness gap: " << format_subset(cmp.complete_gap->gamma) << " derives "
           << cmp.complete_gap->alpha << " only semantically\n";
    }
  }
  attach_timing(report, timer.ms());
  emit(report, args.json, text.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lsx — finite logical structures: classification, valuation semantics, "
               "theorem checks, and the separation gallery"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "decide one property, exit 1 on a counterexample");
  check->add_option("file", check_args.file, "structure file (.ls)")->required();
  check->add_option("--property", check_args.property, "property name")->required();
  check->add_option("--gamma", check_args.gamma, "subset as 0,1,2 or 'empty'");
  int check_alpha = -1;
  check->add_option("--alpha", check_alpha, "target element for parameterized properties");
  check->add_option("--arrow", check_args.arrow_file, "arrow table file");
  check->add_flag("--json", check_args.json, "emit a JSON report");

  std::string classify_file;
  bool classify_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "full classification report");
  classify_cmd->add_option("file", classify_file, "structure file (.ls)")->required();
  classify_cmd->add_flag("--json", classify_json, "emit a JSON report");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "list all subsets with a property");
  enumerate->add_option("file", enum_args.file, "structure file (.ls)")->required();
  enumerate->add_option("--kind", enum_args.kind, "set property name")->required();
  int enum_alpha = -1;
  enumerate->add_option("--alpha", enum_alpha, "target element");
  enumerate->add_option("--arrow", enum_args.arrow_file, "arrow table file");
  enumerate->add_flag("--json", enum_args.json, "emit a JSON report");

  std::string verify_file, verify_theorems = "all", verify_arrow;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run theorem checks against one structure");
  verify->add_option("file", verify_file, "structure file (.ls)")->required();
  verify->add_option("--theorems", verify_theorems, "'all' or a comma list like T01,T24");
  verify->add_option("--arrow", verify_arrow, "extra arrow table file");
  verify->add_flag("--json", verify_json, "emit a JSON report");

  CorpusArgs corpus_args;
  auto* corpus = app.add_subcommand("corpus", "run theorem checks over a generated corpus");
  corpus->add_option("--generator", corpus_args.generator,
                     "arbitrary|monotone|bivaluation|arrowed|mixed");
  corpus->add_option("--count", corpus_args.count, "number of structures");
  corpus->add_option("--size-min", corpus_args.size_min, "smallest carrier");
  corpus->add_option("--size-max", corpus_args.size_max, "largest carrier");
  corpus->add_option("--seed", corpus_args.seed, "corpus seed");
  corpus->add_option("--theorems", corpus_args.theorems, "'all' or a comma list");
  corpus->add_flag("--exhibits", corpus_args.exhibits, "also inject the canonical exhibits");
  corpus->add_flag("--json", corpus_args.json, "emit a JSON report");

  auto* gallery_cmd = app.add_subcommand("gallery", "the separation example gallery");
  gallery_cmd->require_subcommand(1);
  bool gallery_list_json = false;
  auto* glist = gallery_cmd->add_subcommand("list", "list gallery items");
  glist->add_flag("--json", gallery_list_json, "emit a JSON report");
  std::string gallery_id;
  bool gallery_run_json = false;
  auto* grun = gallery_cmd->add_subcommand("run", "run one item's claim scripts");
  grun->add_option("id", gallery_id, "gallery id, e.g. G6 or G6-omega-patched")->required();
  grun->add_flag("--json", gallery_run_json, "emit a JSON report");

  BivalArgs bival_args;
  auto* bival = app.add_subcommand("bival", "extract a distinguished valuation family");
  bival->add_option("file", bival_args.file, "structure file (.ls)")->required();
  bival->add_option("--emit", bival_args.emit_kind, "scs|scs-star|relmax|suszko")->required();
  bival->add_flag("--compare", bival_args.compare, "also compare against the structure");
  bival->add_flag("--json", bival_args.json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const std::string command = echo_command(argc, argv);
  try {
    if (check->parsed()) {
      if (check_alpha >= 0) check_args.alpha = check_alpha;
      return run_check(check_args, command);
    }
    if (classify_cmd->parsed()) return run_classify(classify_file, classify_json, command);
    if (enumerate->parsed()) {
      if (enum_alpha >= 0) enum_args.alpha = enum_alpha;
      return run_enumerate(enum_args, command);
    }
    if (verify->parsed()) {
      return run_verify(verify_file, verify_theorems, verify_arrow, verify_json, command);
    }
    if (corpus->parsed()) return run_corpus(corpus_args, command);
    if (gallery_cmd->parsed()) {
      if (glist->parsed()) return run_gallery_list(gallery_list_json, command);
      return run_gallery_run(gallery_id, gallery_run_json, command);
    }
    if (bival->parsed()) return run_bival(bival_args, command);
    fail(ErrorKind::Domain, "no subcommand");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
