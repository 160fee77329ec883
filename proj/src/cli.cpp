#include "bruhatkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "bruhatkit/bruhat.hpp"
#include "bruhatkit/elliptic.hpp"
#include "bruhatkit/errors.hpp"
#include "bruhatkit/lowrank.hpp"
#include "bruhatkit/realform.hpp"
#include "bruhatkit/rootsys.hpp"

namespace bruhatkit::cli {

using nlohmann::ordered_json;

namespace {

constexpr std::size_t kSl2SamplesPerClass = 1000;

const std::vector<std::pair<Task, std::string>>& task_names() {
  static const std::vector<std::pair<Task, std::string>> names{{Task::grade, "grade"},
                                                                {Task::stratify, "stratify"},
                                                                {Task::criterion, "criterion"},
                                                                {Task::identities, "identities"},
                                                                {Task::lowrank_suite, "lowrank_suite"}};
  return names;
}

bool needs_root_system(Task t) { return t != Task::lowrank_suite; }

template <typename T>
T scalar_as(const YAML::Node& node, const std::string& key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ValidationError("config key '" + key + "' has a malformed value");
  }
}

Rational rational_from(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) throw ValidationError("config key '" + key + "' expects rational entries");
  try {
    return parse_rational(node.Scalar());
  } catch (const std::invalid_argument& e) {
    throw ValidationError("config key '" + key + "': " + e.what());
  }
}

ordered_json rational_json(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return bruhatkit::to_string(q);
}

ordered_json rationals_json(std::span<const Rational> v) {
  ordered_json out = ordered_json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

ordered_json word_json(const std::vector<int>& word) {
  ordered_json out = ordered_json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

std::string word_name(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(i + 1);
  }
  return s;
}

ordered_json root_names(const RootSystem& rs, const RootSet& set) {
  ordered_json out = ordered_json::array();
  for (RootId a : set.ids()) out.push_back(rs.name(a));
  return out;
}

ordered_json root_names(const RootSystem& rs, std::span<const RootId> ids) {
  ordered_json out = ordered_json::array();
  for (RootId a : ids) out.push_back(rs.name(a));
  return out;
}

CartanMatrix cartan_of(const JobConfig& c) {
  try {
    if (c.type_label) return CartanMatrix::from_label(*c.type_label);
    return CartanMatrix(*c.cartan);
  } catch (const ValidationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

ordered_json root_system_section(const RootSystem& rs, const WeylGroup& group) {
  ordered_json out;
  out["cartan"] = rs.cartan().entries();
  out["rank"] = rs.rank();
  out["num_positive"] = rs.num_positive();
  out["symmetrizer"] = rationals_json(rs.symmetrizer());
  ordered_json roots = ordered_json::array();
  for (const auto& r : rs.positive_roots())
    roots.push_back(ordered_json{{"root", bruhatkit::to_string(r)}, {"coords", r.coords}, {"height", r.height()}});
  out["positive_roots"] = std::move(roots);
  out["weyl_order"] = group.size();
  out["longest_element"] = word_name(group[group.longest()].word);
  return out;
}

ordered_json grade_section(const RootSystem& rs, const GradedDecomposition& g, const DominantForm& dom) {
  ordered_json out;
  out["element"] = rationals_json(g.element.coeffs);
  out["dominant_form"] = {{"word", word_json(dom.w.word)},
                          {"name", word_name(dom.w.word)},
                          {"dominant", rationals_json(dom.dominant.coeffs)}};
  ordered_json roots = ordered_json::array();
  for (RootId a = 0; a < rs.num_roots(); ++a)
    roots.push_back({{"root", rs.name(a)}, {"coords", rs.root(a).coords}, {"value", rational_json(g.value(a))}});
  out["roots"] = std::move(roots);
  ordered_json levels = ordered_json::array();
  for (const auto& [value, ids] : g.levels)
    levels.push_back({{"value", rational_json(value)}, {"roots", root_names(rs, ids)}});
  out["levels"] = std::move(levels);
  out["levi_roots"] = root_names(rs, g.levi_roots);
  out["levi_size"] = g.levi_roots.size();
  out["u_plus"] = root_names(rs, g.u_plus);
  out["u_minus"] = root_names(rs, g.u_minus);
  out["dims"] = {{"rank", g.rank},         {"dim_g", g.dim_g},
                 {"dim_levi", g.dim_levi}, {"r", g.r},
                 {"dim_parabolic", g.dim_parabolic}, {"dim_flag", g.dim_flag}};
  out["unipotent_weights"] = rationals_json(unipotent_weights(g));
  return out;
}

ordered_json stratify_section(const WeylGroup& group, const CosetSets& cosets, const Stratification& strat) {
  const auto& rs = group.root_system();
  ordered_json out;
  out["levi_group_order"] = cosets.levi_group.size();
  out["minimal_reps_order"] = cosets.minimal_reps.size();
  out["r"] = strat.r;
  out["dim_g"] = strat.dim_g;
  ordered_json cells = ordered_json::array();
  for (const auto& cell : strat.cells) {
    const auto& w = group[cell.sigma];
    cells.push_back({{"sigma", word_name(w.word)},
                     {"word", word_json(w.word)},
                     {"inversions", root_names(rs, w.inversions)},
                     {"n", cell.n},
                     {"cell_dim", cell.cell_dim},
                     {"u_dim", cell.u_dim},
                     {"gamma", root_names(rs, cell.gamma)}});
  }
  out["cells"] = std::move(cells);
  ordered_json dense = ordered_json::array();
  for (std::size_t k : strat.dense_set) dense.push_back(word_name(group[strat.cells[k].sigma].word));
  out["dense_set"] = std::move(dense);
  ordered_json expected = ordered_json::array();
  for (std::size_t w : expected_dense_set(group, cosets)) expected.push_back(word_name(group[w].word));
  out["expected_dense_set"] = std::move(expected);
  const auto summary = closure_codim_consistency(strat);
  ordered_json hist = ordered_json::array();
  for (const auto& [n, count] : summary.histogram) hist.push_back({{"n", n}, {"cells", count}});
  out["codim_histogram"] = std::move(hist);
  out["max_codim"] = summary.max_codim;
  out["unique_open_cell"] = summary.unique_open_cell;
  return out;
}

ordered_json criterion_section(const WeylGroup& group, const EllipticElement& t, const InnerInvolution& inv,
                               const CriterionVerdict& v) {
  const auto& rs = group.root_system();
  const auto compact = compact_roots(rs, inv);
  ordered_json out;
  out["involution_coweight"] = inv.coweight;
  out["compact_roots"] = root_names(rs, compact.compact & rs.positive_set());
  out["noncompact_roots"] = root_names(rs, compact.noncompact & rs.positive_set());
  out["holds"] = v.holds;
  out["failure"] = v.failure ? ordered_json(bruhatkit::to_string(*v.failure)) : ordered_json(nullptr);
  out["systems_examined"] = v.systems_examined;
  if (v.conjugator) {
    const auto& w = group[*v.conjugator];
    out["conjugator"] = {{"name", word_name(w.word)}, {"word", word_json(w.word)}};
  } else {
    out["conjugator"] = nullptr;
  }
  ordered_json witness = ordered_json::array();
  for (const auto& wr : v.witness)
    witness.push_back({{"root", rs.name(wr.root)},
                       {"coords", rs.root(wr.root).coords},
                       {"value", rational_json(wr.value)},
                       {"parity_value", wr.parity_value},
                       {"compact", wr.compact},
                       {"s1", wr.value >= 0},
                       {"s2", wr.value == 0 || wr.compact}});
  out["witness"] = std::move(witness);
  const auto note = holomorphic_vector_field_note(rs.cartan(), t, inv);
  out["note"] = note ? ordered_json(*note) : ordered_json(nullptr);
  return out;
}

ordered_json identity_section(const IdentityReport& report) {
  return {{"checked", report.checked}, {"failures", report.failures}, {"ok", report.ok()}};
}

ordered_json gram_json(const std::vector<std::vector<Rational>>& m) {
  ordered_json out = ordered_json::array();
  for (const auto& row : m) out.push_back(rationals_json(row));
  return out;
}

ordered_json lowrank_section(const JobConfig& config, const RootSystem* rs) {
  using namespace lowrank;
  ordered_json out;

  const auto sig = su21_signature_table();
  ordered_json metrics = ordered_json::array();
  for (const auto& m : sig.metrics)
    metrics.push_back({{"index", m.index},
                       {"negatives", m.negatives},
                       {"positives", m.positives},
                       {"symmetric", m.symmetric},
                       {"nondegenerate", m.nondegenerate},
                       {"j_squared_is_minus_identity", m.j_squares_to_minus_one},
                       {"gram", gram_json(m.gram)}});
  out["signature_table"] = {{"basis", {"b", "c", "x", "y", "z", "w"}},
                            {"omega", gram_json(sig.omega)},
                            {"omega_antisymmetric", sig.omega_antisymmetric},
                            {"omega_nondegenerate", sig.omega_nondegenerate},
                            {"metrics", std::move(metrics)}};

  ordered_json sl2 = ordered_json::array();
  for (Sl2Class tag : {Sl2Class::K, Sl2Class::A, Sl2Class::N, Sl2Class::O2}) {
    const auto rep = sl2_representative(tag);
    const auto s = sl2_sample_suite(tag, kSl2SamplesPerClass, config.seed);
    sl2.push_back({{"class", to_string(tag)},
                   {"representative_tag", to_string(sl2_classify(rep[0][0], rep[0][1], rep[1][0]))},
                   {"samples", s.samples},
                   {"normalizer_passed", s.normalizer_passed},
                   {"exact_checked", s.exact_checked},
                   {"exact_passed", s.exact_passed},
                   {"invariance_passed", s.invariance_passed},
                   {"within_tolerance", s.max_entry_error <= 1e-9 && s.max_det_error <= 1e-9},
                   {"ok", s.ok()}});
  }
  out["sl2_classes"] = std::move(sl2);

  // The 3x3 model only applies to A2; other jobs get the T = iZ_1 check.
  RationalVector coeffs{1, 0};
  if (rs != nullptr && rs->cartan() == CartanMatrix::from_label("A2")) coeffs = config.elliptic_coeffs;
  const auto levels = a2_model_levels(coeffs);
  const auto a2 = build_root_system(CartanMatrix::from_label("A2"));
  const auto graded = grade(a2, EllipticElement{coeffs});
  ordered_json rows = ordered_json::array();
  bool match = true;
  for (const auto& ml : levels) {
    const Rational g = graded.value(a2.require(ml.root));
    match = match && g == ml.level;
    rows.push_back({{"root", bruhatkit::to_string(ml.root)}, {"model_level", rational_json(ml.level)}, {"grade", rational_json(g)}});
  }
  out["a2_cross_check"] = {{"element", rationals_json(coeffs)}, {"roots", std::move(rows)}, {"match", match}};
  ordered_json compact = ordered_json::array();
  for (const auto& r : su21_compact_model_roots()) compact.push_back(bruhatkit::to_string(r));
  out["su21_compact_model_roots"] = std::move(compact);
  return out;
}

}  // namespace

std::string to_string(Task t) {
  for (const auto& [task, name] : task_names())
    if (task == t) return name;
  return "unknown";
}

Task parse_task(std::string_view name) {
  for (const auto& [task, n] : task_names())
    if (n == name) return task;
  throw ValidationError("unknown task '" + std::string(name) + "'");
}

JobConfig parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ValidationError(std::string("malformed config: ") + e.what());
  }
  if (!root.IsMap()) throw ValidationError("config must be a key/value mapping");

  static const std::set<std::string> known{"type",  "cartan", "elliptic_coeffs", "involution_coweight",
                                           "tasks", "weyl_cap", "seed",          "output"};
  JobConfig c;
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (!known.contains(key)) throw ValidationError("unknown config key '" + key + "'");
    const YAML::Node& v = kv.second;
    if (key == "type") {
      c.type_label = scalar_as<std::string>(v, key);
    } else if (key == "cartan") {
      if (!v.IsSequence()) throw ValidationError("config key 'cartan' expects a matrix");
      std::vector<std::vector<int>> m;
      for (const auto& row : v) {
        if (!row.IsSequence()) throw ValidationError("config key 'cartan' expects a matrix");
        std::vector<int> r;
        for (const auto& e : row) r.push_back(scalar_as<int>(e, key));
        m.push_back(std::move(r));
      }
      c.cartan = std::move(m);
    } else if (key == "elliptic_coeffs") {
      if (!v.IsSequence()) throw ValidationError("config key 'elliptic_coeffs' expects a list");
      for (const auto& e : v) c.elliptic_coeffs.push_back(rational_from(e, key));
    } else if (key == "involution_coweight") {
      if (v.IsNull()) continue;
      if (!v.IsSequence()) throw ValidationError("config key 'involution_coweight' expects a list");
      std::vector<std::int64_t> z;
      for (const auto& e : v) z.push_back(scalar_as<std::int64_t>(e, key));
      c.involution_coweight = std::move(z);
    } else if (key == "tasks") {
      if (!v.IsSequence()) throw ValidationError("config key 'tasks' expects a list");
      for (const auto& e : v) {
        const Task t = parse_task(scalar_as<std::string>(e, key));
        if (std::find(c.tasks.begin(), c.tasks.end(), t) == c.tasks.end()) c.tasks.push_back(t);
      }
    } else if (key == "weyl_cap") {
      const auto cap = scalar_as<std::int64_t>(v, key);
      if (cap <= 0) throw ValidationError("weyl_cap must be positive");
      c.weyl_cap = static_cast<std::size_t>(cap);
    } else if (key == "seed") {
      c.seed = scalar_as<std::uint64_t>(v, key);
    } else if (key == "output") {
      if (!v.IsNull()) c.output = scalar_as<std::string>(v, key);
    }
  }
  return c;
}

JobConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void validate(const JobConfig& c) {
  if (c.tasks.empty()) throw ValidationError("no tasks requested");
  if (c.type_label && c.cartan) throw ValidationError("give either 'type' or 'cartan', not both");
  const bool needs_rs = std::any_of(c.tasks.begin(), c.tasks.end(), needs_root_system);
  const bool has_rs = c.type_label || c.cartan;
  if (!needs_rs && !has_rs) return;
  if (!has_rs) throw ValidationError("a 'type' or 'cartan' entry is required");
  const int rank = cartan_of(c).rank();
  if (needs_rs && c.elliptic_coeffs.empty()) throw ValidationError("'elliptic_coeffs' is required");
  if (!c.elliptic_coeffs.empty() && static_cast<int>(c.elliptic_coeffs.size()) != rank)
    throw ValidationError("'elliptic_coeffs' has " + std::to_string(c.elliptic_coeffs.size()) +
                          " entries, rank is " + std::to_string(rank));
  const bool wants_criterion = std::find(c.tasks.begin(), c.tasks.end(), Task::criterion) != c.tasks.end();
  if (wants_criterion && !c.involution_coweight) throw ValidationError("task 'criterion' needs 'involution_coweight'");
  if (c.involution_coweight && static_cast<int>(c.involution_coweight->size()) != rank)
    throw ValidationError("'involution_coweight' has " + std::to_string(c.involution_coweight->size()) +
                          " entries, rank is " + std::to_string(rank));
}

ordered_json config_to_json(const JobConfig& c) {
  ordered_json out;
  if (c.type_label) out["type"] = *c.type_label;
  if (c.cartan) out["cartan"] = *c.cartan;
  out["elliptic_coeffs"] = rationals_json(c.elliptic_coeffs);
  if (c.involution_coweight) out["involution_coweight"] = *c.involution_coweight;
  ordered_json tasks = ordered_json::array();
  for (Task t : c.tasks) tasks.push_back(to_string(t));
  out["tasks"] = std::move(tasks);
  out["weyl_cap"] = c.weyl_cap;
  out["seed"] = c.seed;
  if (c.output) out["output"] = *c.output;
  return out;
}

RunResult run(const JobConfig& config) {
  validate(config);
  RunResult result;
  auto& report = result.report;
  report["toolkit"] = "bruhatkit";
  report["version"] = std::string(kVersion);
  report["config"] = config_to_json(config);

  auto wants = [&](Task t) { return std::find(config.tasks.begin(), config.tasks.end(), t) != config.tasks.end(); };
  const bool needs_rs = std::any_of(config.tasks.begin(), config.tasks.end(), needs_root_system);

  std::optional<RootSystem> rs;
  if (config.type_label || config.cartan) rs = build_root_system(cartan_of(config));

  if (needs_rs) {
    const auto group = WeylGroup::enumerate(*rs, config.weyl_cap);
    const EllipticElement t{config.elliptic_coeffs};
    const auto grading = grade(*rs, t);
    report["root_system"] = root_system_section(*rs, group);

    if (wants(Task::grade)) report["grade"] = grade_section(*rs, grading, dominant_form(*rs, t));

    std::optional<CosetSets> cosets;
    if (wants(Task::stratify) || wants(Task::identities)) cosets = coset_sets(group, grading.levi_roots);
    if (wants(Task::stratify)) report["stratify"] = stratify_section(group, *cosets, stratify(group, *cosets, grading));
    if (wants(Task::identities)) {
      const auto ids = all_identities(group, *cosets, grading);
      result.identity_failure = !ids.ok();
      report["identities"] = identity_section(ids);
    }
    if (wants(Task::criterion)) {
      const InnerInvolution inv{*config.involution_coweight};
      report["criterion"] = criterion_section(group, t, inv, criterion_s(group, t, inv));
    }
  }
  if (wants(Task::lowrank_suite)) report["lowrank_suite"] = lowrank_section(config, rs ? &*rs : nullptr);
  return result;
}

namespace {

std::string join(const ordered_json& arr, const std::string& sep = ", ") {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += sep;
    s += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return s;
}

}  // namespace

std::string render_text(const ordered_json& report) {
  std::ostringstream os;
  os << "bruhatkit " << report.value("version", "") << "\n";
  if (report.contains("root_system")) {
    const auto& r = report["root_system"];
    os << "\nroot system: rank " << r["rank"] << ", " << r["num_positive"] << " positive roots, |W| = "
       << r["weyl_order"] << "\n  positive roots:";
    for (const auto& root : r["positive_roots"]) os << " " << root["root"].get<std::string>();
    os << "\n";
  }
  if (report.contains("grade")) {
    const auto& g = report["grade"];
    os << "\ngrading of -iT = (" << join(g["element"]) << ")\n";
    for (const auto& lv : g["levels"]) os << "  level " << lv["value"].dump() << ": " << join(lv["roots"]) << "\n";
    os << "  levi roots (" << g["levi_size"] << "): " << join(g["levi_roots"]) << "\n";
    const auto& d = g["dims"];
    os << "  dim g = " << d["dim_g"] << ", dim l = " << d["dim_levi"] << ", r = " << d["r"]
       << ", dim q = " << d["dim_parabolic"] << "\n";
    os << "  dominant form: " << g["dominant_form"]["name"].get<std::string>() << " -> ("
       << join(g["dominant_form"]["dominant"]) << ")\n";
  }
  if (report.contains("stratify")) {
    const auto& s = report["stratify"];
    os << "\nstratification: |W_1| = " << s["levi_group_order"] << ", |W^1| = " << s["minimal_reps_order"]
       << ", r = " << s["r"] << "\n";
    for (const auto& c : s["cells"])
      os << "  " << c["sigma"].get<std::string>() << ": n = " << c["n"] << ", cell dim = " << c["cell_dim"]
         << ", gamma = {" << join(c["gamma"]) << "}\n";
    os << "  dense set: " << join(s["dense_set"]) << "\n";
  }
  if (report.contains("identities")) {
    const auto& i = report["identities"];
    os << "\nidentities: " << i["checked"] << " checked, " << i["failures"].size() << " failed\n";
    for (const auto& f : i["failures"]) os << "  " << f.get<std::string>() << "\n";
  }
  if (report.contains("criterion")) {
    const auto& c = report["criterion"];
    os << "\ncriterion (S): " << (c["holds"].get<bool>() ? "holds" : "fails");
    if (!c["failure"].is_null()) os << " (" << c["failure"].get<std::string>() << ")";
    os << "\n";
    if (!c["conjugator"].is_null()) os << "  conjugator: " << c["conjugator"]["name"].get<std::string>() << "\n";
    for (const auto& w : c["witness"])
      os << "  " << w["root"].get<std::string>() << ": value " << w["value"].dump() << ", "
         << (w["compact"].get<bool>() ? "compact" : "noncompact") << "\n";
    if (!c["note"].is_null()) os << "  note: " << c["note"].get<std::string>() << "\n";
  }
  if (report.contains("lowrank_suite")) {
    const auto& l = report["lowrank_suite"];
    os << "\nsu(2,1) pseudo-Kahler signatures (neg, pos):\n";
    for (const auto& m : l["signature_table"]["metrics"])
      os << "  g" << m["index"] << ": (" << m["negatives"] << ", " << m["positives"] << ")\n";
    os << "sl(2,R) classes:\n";
    for (const auto& s : l["sl2_classes"])
      os << "  " << s["class"].get<std::string>() << ": " << s["normalizer_passed"] << "/" << s["samples"]
         << " certificates, " << s["invariance_passed"] << "/" << s["samples"] << " invariant\n";
    os << "A2 matrix model cross-check: " << (l["a2_cross_check"]["match"].get<bool>() ? "match" : "MISMATCH") << "\n";
  }
  return os.str();
}

void write_atomically(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  fs::path tmp = dir / ("." + path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace bruhatkit::cli
