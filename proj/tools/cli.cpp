#include "cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "covrough/approximation.hpp"
#include "covrough/covering_ops.hpp"
#include "covrough/enumeration.hpp"
#include "covrough/io.hpp"
#include "covrough/laws.hpp"
#include "covrough/morphisms.hpp"

namespace covrough::cli {

namespace {

using nlohmann::json;

Covering load_space(const std::string& path) { return io::covering_from_json(io::read_json_file(path)); }

Subset parse_set(const Universe& u, const std::string& csv) {
  const auto labels = io::split_labels(csv);
  Mask bits = 0;
  for (const auto& l : labels) bits |= Mask{1} << u.index_of(l);
  return Subset(u, bits);
}

json neighborhoods_json(const ApproxSpace& sp) {
  json j = json::object();
  const Universe& u = sp.universe();
  for (std::size_t x = 0; x < u.size(); ++x) j[u.name(x)] = io::to_json(neighborhood(sp, x));
  return j;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct ApproxArgs {
  std::string space;
  std::string set;
  std::string method = "neigh";
  std::string show = "lower,upper";
  bool json = false;
};

int cmd_approx(const ApproxArgs& a, std::ostream& out) {
  const ApproxSpace sp(load_space(a.space));
  const Subset x = parse_set(sp.universe(), a.set);

  bool want_lower = false;
  bool want_upper = false;
  bool want_neigh = false;
  for (const auto& item : io::split_labels(a.show)) {
    if (item == "lower") want_lower = true;
    else if (item == "upper") want_upper = true;
    else if (item == "neighborhoods") want_neigh = true;
    else throw Error(ErrorCode::InvalidArgument, "--show accepts lower, upper, neighborhoods; got '" + item + "'");
  }

  std::optional<Subset> up;
  if (want_upper) {
    if (a.method == "def3") up = upper_def3(sp, x);
    else if (a.method == "subcov") up = upper_subcov(sp, x);
    else up = upper_neigh(sp, x);
  }

  if (a.json) {
    json j{{"set", io::to_json(x)}, {"method", a.method}};
    if (want_lower) j["lower"] = io::to_json(lower(sp, x));
    if (up) j["upper"] = io::to_json(*up);
    if (want_neigh) j["neighborhoods"] = neighborhoods_json(sp);
    out << j.dump() << '\n';
    return kOk;
  }
  if (want_lower) out << "lower: " << lower(sp, x).to_string() << '\n';
  if (up) out << "upper: " << up->to_string() << '\n';
  if (want_neigh) {
    out << "neighborhoods:\n";
    const Universe& u = sp.universe();
    for (std::size_t i = 0; i < u.size(); ++i) {
      out << "  N(" << u.name(i) << ") = " << neighborhood(sp, i).to_string() << '\n';
    }
  }
  return kOk;
}

OperatorTag unary_tag(const std::string& name) {
  if (name == "reduct") return OperatorTag::Reduct;
  if (name == "int") return OperatorTag::Int;
  if (name == "nei") return OperatorTag::Nei;
  return OperatorTag::DefinableClosure;
}

int cmd_op(const std::string& space, const std::string& apply, std::ostream& out) {
  out << io::to_json(apply_unary(unary_tag(apply), load_space(space))).dump(2) << '\n';
  return kOk;
}

int cmd_combine(const std::string& left, const std::string& right, const std::string& with,
                std::ostream& out) {
  const OperatorTag tag = with == "meet" ? OperatorTag::Meet : OperatorTag::Join;
  out << io::to_json(apply_binary(tag, load_space(left), load_space(right))).dump(2) << '\n';
  return kOk;
}

int cmd_equiv(const std::string& left, const std::string& right, bool as_json, std::ostream& out) {
  const Covering a = load_space(left);
  const Covering b = load_space(right);
  require_same_universe(a.universe(), b.universe());
  const bool sl = same_lower_operator(a, b);
  const bool su = same_upper_operator(a, b);
  const Covering ra = reduct(a);
  const Covering rb = reduct(b);
  if (as_json) {
    out << json{{"same_lower", sl},
                {"same_upper", su},
                {"reduct_left", io::to_json(ra).at("covering")},
                {"reduct_right", io::to_json(rb).at("covering")}}
               .dump()
        << '\n';
    return kOk;
  }
  out << "same_lower: " << yes_no(sl) << '\n'
      << "same_upper: " << yes_no(su) << '\n'
      << "reduct_left: " << ra.to_string() << '\n'
      << "reduct_right: " << rb.to_string() << '\n';
  return kOk;
}

struct HomArgs {
  std::string source;
  std::string target;
  std::string map;
  std::string mode = "definable";
  std::optional<std::string> set;
  bool json = false;
};

int cmd_hom(const HomArgs& a, std::ostream& out) {
  const ApproxSpace src(load_space(a.source));
  const ApproxSpace dst(load_space(a.target));
  const Mapping f = io::mapping_from_json(src.universe(), dst.universe(), io::read_json_file(a.map));
  const HomMode mode = a.mode == "strict" ? HomMode::Strict : HomMode::Definable;
  const bool hom = is_homomorphism(f, src, dst, mode);
  const bool iso = is_isomorphism(f, src, dst, mode);

  json j{{"mode", to_string(mode)}, {"hom", hom}, {"iso", iso}};
  std::ostringstream text;
  text << "mode: " << to_string(mode) << '\n' << "hom: " << yes_no(hom) << '\n' << "iso: " << yes_no(iso) << '\n';

  if (a.set) {
    const Subset x = parse_set(src.universe(), *a.set);
    if (is_homomorphism(f, src, dst, HomMode::Definable)) {
      const auto r = preservation_report(f, src, dst, x);
      j["set"] = io::to_json(x);
      j["f_lower_x"] = io::to_json(r.f_lower_x);
      j["lower_f_x"] = io::to_json(r.lower_f_x);
      j["f_upper_x"] = io::to_json(r.f_upper_x);
      j["upper_f_x"] = io::to_json(r.upper_f_x);
      j["lower_inclusion_holds"] = r.lower_inclusion_holds;
      j["lower_equal"] = r.lower_equal;
      j["upper_equal"] = r.upper_equal;
      if (r.neighborhoods_transported) j["neighborhoods_transported"] = *r.neighborhoods_transported;
      text << "set: " << x.to_string() << '\n'
           << "f(X-): " << r.f_lower_x.to_string() << '\n'
           << "f(X)-: " << r.lower_f_x.to_string() << '\n'
           << "f(X+): " << r.f_upper_x.to_string() << '\n'
           << "f(X)+: " << r.upper_f_x.to_string() << '\n'
           << "lower_inclusion_holds: " << yes_no(r.lower_inclusion_holds) << '\n'
           << "lower_equal: " << yes_no(r.lower_equal) << '\n'
           << "upper_equal: " << yes_no(r.upper_equal) << '\n';
      if (r.neighborhoods_transported) {
        text << "neighborhoods_transported: " << yes_no(*r.neighborhoods_transported) << '\n';
      }
    } else {
      j["preservation"] = "skipped: not a homomorphism";
      text << "preservation: skipped, not a homomorphism\n";
    }
  }
  if (a.json) out << j.dump() << '\n';
  else out << text.str();
  return kOk;
}

int cmd_count(std::size_t n, std::ostream& out) {
  out << count_coverings(n).str() << '\n';
  return kOk;
}

int cmd_enumerate(std::size_t n, std::ostream& out) {
  if (n == 0) throw Error(ErrorCode::EmptyUniverse, "--n must be at least 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  auto stream = enumerate_coverings(Universe(names));
  while (auto c = stream.next()) out << io::to_json(*c).dump() << '\n';
  return kOk;
}

struct CheckArgs {
  std::vector<std::string> laws;
  laws::ScopeSpec scope;
  std::size_t jobs = 1;
  bool json = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  std::vector<laws::LawId> ids;
  for (const auto& name : a.laws) ids.push_back(laws::parse_law(name));
  if (ids.empty()) ids.assign(laws::all_laws().begin(), laws::all_laws().end());
  const laws::ScopeSpec scope = laws::apply_environment(a.scope);
  const auto reports = laws::run_laws(ids, scope, a.jobs);

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (a.json) {
    json j{{"scope",
            {{"max_n", scope.max_n},
             {"seeds", scope.seeds},
             {"pair_seeds", scope.pair_seeds},
             {"sample_sets", scope.sample_sets}}},
           {"passed", ok},
           {"laws", json::array()}};
    for (const auto& r : reports) j["laws"].push_back(laws::to_json(r));
    out << j.dump(2) << '\n';
  } else {
    out << laws::format_table(reports);
  }
  return ok ? kOk : kLawFailure;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering-based rough set toolkit", "covrough"};
  app.require_subcommand(1);

  ApproxArgs approx;
  auto* sub_approx = app.add_subcommand("approx", "lower and upper approximations of a set");
  sub_approx->add_option("--space", approx.space, "space file")->required();
  sub_approx->add_option("--set", approx.set, "comma-separated labels; empty for the empty set")->required();
  sub_approx->add_option("--method", approx.method, "upper approximation route")
      ->check(CLI::IsMember({"def3", "neigh", "subcov"}));
  sub_approx->add_option("--show", approx.show, "any of lower,upper,neighborhoods");
  sub_approx->add_flag("--json", approx.json, "JSON output");

  std::string op_space, op_apply;
  auto* sub_op = app.add_subcommand("op", "apply a covering operator");
  sub_op->add_option("--space", op_space, "space file")->required();
  sub_op->add_option("--apply", op_apply, "operator")
      ->required()
      ->check(CLI::IsMember({"reduct", "int", "nei", "closure"}));

  std::string left, right, with;
  auto* sub_combine = app.add_subcommand("combine", "join or meet of two coverings");
  sub_combine->add_option("--left", left, "space file")->required();
  sub_combine->add_option("--right", right, "space file")->required();
  sub_combine->add_option("--with", with, "combinator")->required()->check(CLI::IsMember({"join", "meet"}));

  std::string eq_left, eq_right;
  bool eq_json = false;
  auto* sub_equiv = app.add_subcommand("equiv", "compare the approximation operators of two coverings");
  sub_equiv->add_option("--left", eq_left, "space file")->required();
  sub_equiv->add_option("--right", eq_right, "space file")->required();
  sub_equiv->add_flag("--json", eq_json, "JSON output");

  HomArgs hom;
  auto* sub_hom = app.add_subcommand("hom", "homomorphism and preservation checks");
  sub_hom->add_option("--source", hom.source, "space file")->required();
  sub_hom->add_option("--target", hom.target, "space file")->required();
  sub_hom->add_option("--map", hom.map, "mapping file")->required();
  sub_hom->add_option("--mode", hom.mode, "homomorphism reading")->check(CLI::IsMember({"strict", "definable"}));
  sub_hom->add_option("--set", hom.set, "comma-separated labels of the source");
  sub_hom->add_flag("--json", hom.json, "JSON output");

  std::size_t count_n = 0;
  auto* sub_count = app.add_subcommand("count-coverings", "number of coverings of an n-element set");
  sub_count->add_option("--n", count_n, "universe size")->required();

  std::size_t enum_n = 0;
  auto* sub_enum = app.add_subcommand("enumerate-coverings", "every covering of x1..xn, one JSON space per line");
  sub_enum->add_option("--n", enum_n, "universe size")->required();

  CheckArgs check;
  auto* sub_check = app.add_subcommand("check", "run the law catalog");
  sub_check->add_option("--law", check.laws, "law id (repeatable); default all");
  sub_check->add_option("--max-n", check.scope.max_n, "largest universe size");
  sub_check->add_option("--seeds", check.scope.seeds, "sampled coverings per size");
  sub_check->add_option("--pair-seeds", check.scope.pair_seeds, "sampled covering pairs per size");
  sub_check->add_option("--sample-sets", check.scope.sample_sets, "random subsets per sampled covering");
  sub_check->add_option("--jobs", check.jobs, "worker threads")->check(CLI::Range(1, 256));
  sub_check->add_flag("--json", check.json, "JSON output");

  std::vector<std::string> argv_store{"covrough"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*sub_approx) return cmd_approx(approx, out);
    if (*sub_op) return cmd_op(op_space, op_apply, out);
    if (*sub_combine) return cmd_combine(left, right, with, out);
    if (*sub_equiv) return cmd_equiv(eq_left, eq_right, eq_json, out);
    if (*sub_hom) return cmd_hom(hom, out);
    if (*sub_count) return cmd_count(count_n, out);
    if (*sub_enum) return cmd_enumerate(enum_n, out);
    if (*sub_check) return cmd_check(check, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? kParseError : kSemanticError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSemanticError;
  }
  return kParseError;
}

}  // namespace covrough::cli
