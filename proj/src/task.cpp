#include "gaql/task.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "gaql/geometry.hpp"
#include "gaql/groebner.hpp"

namespace gaql::cli {

namespace {

enum class Field {
  Expr,          // polynomial expression
  ExprList,      // array of expressions
  Names,         // array of identifiers (or a comma-separated string)
  DeclPoly,      // declares a polynomial name
  DeclMap,       // declares a map name
  DeclDerivation,
  DeclAction,
  MapRef,        // declared map name or inline expression list
  DerivationRef, // declared derivation name or inline expression list
  ActionRef,     // declared action name
  UInt,
  Rationals,
  PointList,
  Grid,
  Order,
};

struct FieldSpec {
  const char* key;
  Field kind;
  bool required;
};

enum class Kind { Poly, Map, Derivation, Action };

const std::map<std::string, std::vector<FieldSpec>>& schema() {
  static const std::map<std::string, std::vector<FieldSpec>> table = {
      {"ring", {{"vars", Field::Names, true}}},
      {"poly", {{"expr", Field::Expr, true}, {"name", Field::DeclPoly, false}}},
      {"map",
       {{"name", Field::DeclMap, true},
        {"components", Field::ExprList, true},
        {"targets", Field::Names, false}}},
      {"derivation",
       {{"name", Field::DeclDerivation, true}, {"images", Field::ExprList, true}}},
      {"apply",
       {{"derivation", Field::DerivationRef, true},
        {"poly", Field::Expr, true},
        {"k", Field::UInt, false}}},
      {"nilpotency", {{"derivation", Field::DerivationRef, true}, {"bound", Field::UInt, false}}},
      {"exp",
       {{"derivation", Field::DerivationRef, true},
        {"bound", Field::UInt, false},
        {"name", Field::DeclAction, false}}},
      {"act",
       {{"action", Field::ActionRef, false},
        {"derivation", Field::DerivationRef, false},
        {"bound", Field::UInt, false},
        {"poly", Field::Expr, true}}},
      {"invariant",
       {{"action", Field::ActionRef, false},
        {"derivation", Field::DerivationRef, false},
        {"bound", Field::UInt, false},
        {"poly", Field::Expr, false},
        {"map", Field::MapRef, false},
        {"targets", Field::Names, false},
        {"candidates", Field::ExprList, false}}},
      {"jacobian-derivation",
       {{"map", Field::MapRef, true},
        {"targets", Field::Names, false},
        {"name", Field::DeclDerivation, false}}},
      {"slice",
       {{"derivation", Field::DerivationRef, true},
        {"degree_bound", Field::UInt, false},
        {"map", Field::MapRef, false},
        {"targets", Field::Names, false}}},
      {"localization",
       {{"derivation", Field::DerivationRef, true},
        {"map", Field::MapRef, true},
        {"targets", Field::Names, false},
        {"poly", Field::Expr, true},
        {"degree_bound", Field::UInt, false},
        {"power_bound", Field::UInt, false}}},
      {"fiber",
       {{"map", Field::MapRef, true},
        {"targets", Field::Names, false},
        {"point", Field::Rationals, true},
        {"order", Field::Order, false}}},
      {"singular-locus",
       {{"map", Field::MapRef, true},
        {"targets", Field::Names, false},
        {"order", Field::Order, false}}},
      {"scan",
       {{"map", Field::MapRef, true},
        {"targets", Field::Names, false},
        {"points", Field::PointList, false},
        {"grid", Field::Grid, false}}},
      {"subalgebra",
       {{"poly", Field::Expr, true},
        {"generators", Field::ExprList, false},
        {"map", Field::MapRef, false},
        {"targets", Field::Names, false}}},
      {"groebner", {{"generators", Field::ExprList, true}, {"order", Field::Order, false}}},
  };
  return table;
}

std::vector<std::string> split_names(const json& v) {
  std::vector<std::string> out;
  if (v.is_array()) {
    for (const auto& e : v) out.push_back(e.get<std::string>());
    return out;
  }
  std::string s = v.get<std::string>();
  std::string cur;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

Rational rational_value(const json& v) {
  if (v.is_number_integer()) return Rational(mpz_class(v.dump()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::MalformedRational,
              "expected an integer or a \"a/b\" string, got " + v.dump());
}

std::vector<Rational> rationals_value(const json& v) {
  std::vector<Rational> out;
  if (v.is_string()) {
    for (const auto& s : split_names(v)) out.push_back(parse_rational(s));
    return out;
  }
  for (const auto& e : v) out.push_back(rational_value(e));
  return out;
}

MonomialOrder parse_order(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::grevlex();
  if (s == "lex") return MonomialOrder::lex();
  throw Error(ErrorCode::InvalidArgument, "unknown order '" + s + "' (lex|grevlex)");
}

json poly_json(const Polynomial& p) { return format_polynomial(p); }

json poly_list_json(const std::vector<Polynomial>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(format_polynomial(p));
  return arr;
}

json rationals_json(const std::vector<Rational>& qs) {
  json arr = json::array();
  for (const auto& q : qs) arr.push_back(to_string(q));
  return arr;
}

json certificate_json(const NilpotencyCertificate& cert) {
  json j;
  j["status"] = cert.certified() ? "certified" : "inconclusive";
  j["bound"] = cert.bound;
  if (cert.certified()) j["orders"] = cert.orders;
  json chains = json::array();
  for (const auto& chain : cert.chains) chains.push_back(poly_list_json(chain));
  j["chains"] = chains;
  return j;
}

json degree_json(std::int64_t d) {
  if (d == kMinusInfinity) return "-inf";
  return d;
}

// --- load-time validation ---------------------------------------------------

class Validator {
 public:
  void check(const json& cmd, std::size_t line) {
    line_ = line;
    if (!cmd.is_object()) fail(ErrorCode::Syntax, "each line must be a JSON object");
    auto it = cmd.find("cmd");
    if (it == cmd.end() || !it->is_string()) fail(ErrorCode::Syntax, "missing string field \"cmd\"");
    const std::string name = it->get<std::string>();
    auto spec = schema().find(name);
    if (spec == schema().end()) fail(ErrorCode::InvalidArgument, "unknown command '" + name + "'");

    std::set<std::string> allowed{"cmd"};
    for (const auto& f : spec->second) allowed.insert(f.key);
    for (const auto& [key, value] : cmd.items())
      if (!allowed.count(key))
        fail(ErrorCode::InvalidArgument, "command '" + name + "' has no field \"" + key + "\"");

    if (name != "ring" && !ring_) fail(ErrorCode::InvalidRing, "no ring declared before '" + name + "'");

    std::vector<std::pair<std::string, Kind>> declared;
    for (const auto& f : spec->second) {
      auto v = cmd.find(f.key);
      if (v == cmd.end()) {
        if (f.required) fail(ErrorCode::InvalidArgument, "missing field \"" + std::string(f.key) + "\"");
        continue;
      }
      check_field(f, *v, declared);
    }
    check_combinations(name, cmd);
    for (auto& [n, kind] : declared) names_[n] = kind;
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const {
    throw LoadError(code, msg, line_);
  }

  void expression(const json& v) {
    if (!v.is_string()) fail(ErrorCode::Syntax, "expected an expression string, got " + v.dump());
    try {
      parse_polynomial(v.get<std::string>(), scratch_);
    } catch (const ParseError& e) {
      fail(e.code(), "in expression \"" + v.get<std::string>() + "\": " + e.what());
    }
  }

  void reference(const json& v, Kind kind, const char* what) {
    if (!v.is_string()) fail(ErrorCode::Syntax, std::string("expected a ") + what + " name");
    auto it = names_.find(v.get<std::string>());
    if (it == names_.end() || it->second != kind)
      fail(ErrorCode::UnknownName, std::string("unknown ") + what + " '" + v.get<std::string>() + "'");
  }

  void declaration(const json& v, Kind kind, std::vector<std::pair<std::string, Kind>>& out) {
    if (!v.is_string() || !is_identifier(v.get<std::string>()))
      fail(ErrorCode::InvalidArgument, "declared names must be identifiers");
    const std::string n = v.get<std::string>();
    if (ring_->index_of(n)) fail(ErrorCode::InvalidArgument, "name '" + n + "' shadows a ring variable");
    auto it = names_.find(n);
    if (it != names_.end() && it->second != kind)
      fail(ErrorCode::InvalidArgument, "name '" + n + "' already declared with another kind");
    out.emplace_back(n, kind);
  }

  void names_list(const json& v) {
    if (!(v.is_string() || v.is_array())) fail(ErrorCode::Syntax, "expected a list of names");
    if (v.is_array())
      for (const auto& e : v)
        if (!e.is_string()) fail(ErrorCode::Syntax, "expected a list of names");
  }

  void rationals(const json& v) {
    try {
      if (!(v.is_array() || v.is_string())) throw Error(ErrorCode::MalformedRational, "expected a point");
      rationals_value(v);
    } catch (const Error& e) {
      fail(e.code(), e.what());
    }
  }

  void check_field(const FieldSpec& f, const json& v,
                   std::vector<std::pair<std::string, Kind>>& declared) {
    switch (f.kind) {
      case Field::Expr: expression(v); break;
      case Field::ExprList:
        if (!v.is_array() || v.empty()) fail(ErrorCode::Syntax, std::string("field \"") + f.key + "\" needs a non-empty list");
        for (const auto& e : v) expression(e);
        break;
      case Field::Names:
        names_list(v);
        if (std::string(f.key) == "vars") declare_ring(split_names(v));
        break;
      case Field::DeclPoly: declaration(v, Kind::Poly, declared); break;
      case Field::DeclMap: declaration(v, Kind::Map, declared); break;
      case Field::DeclDerivation: declaration(v, Kind::Derivation, declared); break;
      case Field::DeclAction: declaration(v, Kind::Action, declared); break;
      case Field::MapRef:
        if (v.is_array()) {
          for (const auto& e : v) expression(e);
        } else {
          reference(v, Kind::Map, "map");
        }
        break;
      case Field::DerivationRef:
        if (v.is_array()) {
          if (v.size() != ring_->arity())
            fail(ErrorCode::LengthMismatch, "inline derivation needs one image per variable");
          for (const auto& e : v) expression(e);
        } else {
          reference(v, Kind::Derivation, "derivation");
        }
        break;
      case Field::ActionRef: reference(v, Kind::Action, "action"); break;
      case Field::UInt:
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 1000000)
          fail(ErrorCode::InvalidArgument, std::string("field \"") + f.key + "\" must be a natural number");
        break;
      case Field::Rationals: rationals(v); break;
      case Field::PointList:
        if (!v.is_array() || v.empty()) fail(ErrorCode::Syntax, "\"points\" needs a non-empty list of points");
        for (const auto& p : v) rationals(p);
        break;
      case Field::Grid:
        if (!v.is_object() || !v.contains("lower") || !v.contains("upper") || !v.contains("steps"))
          fail(ErrorCode::MalformedGrid, "\"grid\" needs lower, upper and steps");
        rationals(v["lower"]);
        rationals(v["upper"]);
        if (!v["steps"].is_array()) fail(ErrorCode::MalformedGrid, "grid steps must be a list");
        for (const auto& s : v["steps"])
          if (!s.is_number_unsigned()) fail(ErrorCode::MalformedGrid, "grid steps must be natural numbers");
        break;
      case Field::Order:
        try {
          parse_order(v.is_string() ? v.get<std::string>() : "");
        } catch (const Error& e) {
          fail(e.code(), e.what());
        }
        break;
    }
  }

  void check_combinations(const std::string& name, const json& cmd) {
    auto has = [&](const char* k) { return cmd.contains(k); };
    if ((name == "act" || name == "invariant") && has("action") == has("derivation"))
      fail(ErrorCode::InvalidArgument, "give exactly one of \"action\" or \"derivation\"");
    if (name == "invariant" && !has("poly") && !has("map"))
      fail(ErrorCode::InvalidArgument, "\"invariant\" needs \"poly\" or \"map\"");
    if (name == "invariant" && has("candidates") && !has("map"))
      fail(ErrorCode::InvalidArgument, "\"candidates\" needs a \"map\"");
    if (name == "scan" && has("points") == has("grid"))
      fail(ErrorCode::MalformedGrid, "give exactly one of \"points\" or \"grid\"");
    if (name == "subalgebra" && has("generators") == has("map"))
      fail(ErrorCode::InvalidArgument, "give exactly one of \"generators\" or \"map\"");
  }

  void declare_ring(const std::vector<std::string>& vars) {
    try {
      ring_ = make_ring(vars);
    } catch (const Error& e) {
      fail(e.code(), e.what());
    }
    names_.clear();
    rebuild_scratch();
  }

  void rebuild_scratch() {
    std::vector<std::string> vars = ring_->variables();
    for (const auto& [n, kind] : names_)
      if (kind == Kind::Poly) vars.push_back(n);
    scratch_ = make_ring(vars);
  }

 public:
  void after_command() {
    if (ring_) rebuild_scratch();
  }

 private:
  std::size_t line_ = 0;
  RingPtr ring_;
  RingPtr scratch_;
  std::map<std::string, Kind> names_;
};

}  // namespace

unsigned default_nilpotency_bound() {
  const char* env = std::getenv("GAQL_DEFAULT_BOUND");
  if (env == nullptr) return kDefaultNilpotencyBound;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v == 0 || v > 1000000)
    throw Error(ErrorCode::InvalidArgument,
                std::string("GAQL_DEFAULT_BOUND must be a natural number in 1..1000000, got '") + env + "'");
  return static_cast<unsigned>(v);
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : schema()) out.push_back(k);
    return out;
  }();
  return names;
}

std::vector<std::string> command_fields(const std::string& command) {
  auto it = schema().find(command);
  if (it == schema().end()) throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
  std::vector<std::string> out;
  for (const auto& f : it->second) {
    if (f.kind == Field::Grid) {
      out.insert(out.end(), {"lower", "upper", "steps"});
    } else {
      out.push_back(f.key);
    }
  }
  return out;
}

json command_from_flags(const std::string& command,
                        const std::map<std::string, std::string>& flags,
                        const std::vector<std::string>& ring_vars) {
  auto it = schema().find(command);
  if (it == schema().end()) throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
  json cmd{{"cmd", command}};
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
      std::size_t b = item.find_first_not_of(" \t");
      std::size_t e = item.find_last_not_of(" \t");
      out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return out;
  };
  auto is_reference = [&](const std::string& s) {
    return is_identifier(s) &&
           std::find(ring_vars.begin(), ring_vars.end(), s) == ring_vars.end();
  };
  for (const auto& f : it->second) {
    if (f.kind == Field::Grid) {
      if (!flags.count("lower") && !flags.count("upper") && !flags.count("steps")) continue;
      auto coords = [&](const char* key) {
        return flags.count(key) ? json(split(flags.at(key), ',')) : json::array();
      };
      json grid{{"lower", coords("lower")},
                {"upper", coords("upper")},
                {"steps", json::array()}};
      if (flags.count("steps")) {
        for (const auto& s : split(flags.at("steps"), ',')) {
          try {
            grid["steps"].push_back(std::stoul(s));
          } catch (const std::exception&) {
            throw Error(ErrorCode::MalformedGrid, "grid steps must be natural numbers");
          }
        }
      }
      cmd["grid"] = grid;
      continue;
    }
    auto v = flags.find(f.key);
    if (v == flags.end()) continue;
    const std::string& s = v->second;
    switch (f.kind) {
      case Field::ExprList: cmd[f.key] = split(s, ','); break;
      case Field::MapRef:
      case Field::DerivationRef:
        if (is_reference(s))
          cmd[f.key] = s;
        else
          cmd[f.key] = split(s, ',');
        break;
      case Field::UInt:
        try {
          std::size_t used = 0;
          unsigned long n = std::stoul(s, &used);
          if (used != s.size()) throw std::invalid_argument(s);
          cmd[f.key] = n;
        } catch (const std::exception&) {
          throw Error(ErrorCode::InvalidArgument, std::string("--") + f.key + " expects a natural number");
        }
        break;
      case Field::Rationals: cmd[f.key] = split(s, ','); break;
      case Field::PointList: {
        json points = json::array();
        for (const auto& p : split(s, ';')) points.push_back(split(p, ','));
        cmd[f.key] = points;
        break;
      }
      default: cmd[f.key] = s; break;
    }
  }
  return cmd;
}

void validate_task(const std::vector<json>& commands) {
  Validator v;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    v.check(commands[i], i + 1);
    v.after_command();
  }
}

std::vector<json> load_task(std::istream& in) {
  std::vector<json> commands;
  std::string text;
  std::size_t line = 0;
  Validator v;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json cmd;
    try {
      cmd = json::parse(text);
    } catch (const json::parse_error& e) {
      throw LoadError(ErrorCode::Syntax, std::string("invalid JSON: ") + e.what(), line);
    }
    v.check(cmd, line);
    v.after_command();
    cmd["__line"] = line;
    commands.push_back(std::move(cmd));
  }
  return commands;
}

// --- execution --------------------------------------------------------------

Session::Session(RunOptions options) : options_(std::move(options)) {}

json Session::execute(const json& command, std::size_t line) {
  json input = command;
  input.erase("__line");
  json record;
  record["line"] = line;
  record["input"] = input;
  record["cmd"] = input.value("cmd", "");
  auto start = std::chrono::steady_clock::now();
  try {
    record["result"] = dispatch(input.at("cmd").get<std::string>(), input);
    record["status"] = "ok";
  } catch (const Error& e) {
    record["status"] = "error";
    record["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  } catch (const json::exception& e) {
    record["status"] = "error";
    record["error"] = {{"code", "invalid_argument"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    record["status"] = "error";
    record["error"] = {{"code", "internal"}, {"message", e.what()}};
  }
  if (options_.timing) {
    auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    record["timing"] = {{"ms", elapsed.count()}};
  }
  return record;
}

json Session::dispatch(const std::string& name, const json& cmd) {
  static const std::map<std::string, json (Session::*)(const json&)> handlers = {
      {"ring", &Session::run_ring},
      {"poly", &Session::run_poly},
      {"map", &Session::run_map},
      {"derivation", &Session::run_derivation},
      {"apply", &Session::run_apply},
      {"nilpotency", &Session::run_nilpotency},
      {"exp", &Session::run_exp},
      {"act", &Session::run_act},
      {"invariant", &Session::run_invariant},
      {"jacobian-derivation", &Session::run_jacobian_derivation},
      {"slice", &Session::run_slice},
      {"localization", &Session::run_localization},
      {"fiber", &Session::run_fiber},
      {"singular-locus", &Session::run_singular_locus},
      {"scan", &Session::run_scan},
      {"subalgebra", &Session::run_subalgebra},
      {"groebner", &Session::run_groebner},
  };
  auto it = handlers.find(name);
  if (it == handlers.end()) throw Error(ErrorCode::InvalidArgument, "unknown command '" + name + "'");
  return (this->*(it->second))(cmd);
}

RingPtr Session::require_ring() const {
  if (!ring_) throw Error(ErrorCode::InvalidRing, "no ring declared");
  return ring_;
}

Polynomial Session::poly_arg(const json& v) const {
  return parse_polynomial(v.get<std::string>(), require_ring(), &polys_);
}

std::vector<Polynomial> Session::poly_list_arg(const json& v) const {
  std::vector<Polynomial> out;
  for (const auto& e : v) out.push_back(poly_arg(e));
  return out;
}

PolyMap Session::map_arg(const json& cmd) const {
  const json& v = cmd.at("map");
  if (v.is_string()) {
    auto it = maps_.find(v.get<std::string>());
    if (it == maps_.end()) throw Error(ErrorCode::UnknownName, "unknown map '" + v.get<std::string>() + "'");
    return it->second;
  }
  std::vector<std::string> targets;
  if (cmd.contains("targets")) targets = split_names(cmd["targets"]);
  return PolyMap(require_ring(), poly_list_arg(v), targets);
}

Derivation Session::derivation_arg(const json& cmd) const {
  const json& v = cmd.at("derivation");
  if (v.is_string()) {
    auto it = derivations_.find(v.get<std::string>());
    if (it == derivations_.end())
      throw Error(ErrorCode::UnknownName, "unknown derivation '" + v.get<std::string>() + "'");
    return it->second;
  }
  return Derivation(require_ring(), poly_list_arg(v));
}

GaAction Session::action_arg(const json& cmd) const {
  if (cmd.contains("action")) {
    auto it = actions_.find(cmd["action"].get<std::string>());
    if (it == actions_.end())
      throw Error(ErrorCode::UnknownName, "unknown action '" + cmd["action"].get<std::string>() + "'");
    return it->second;
  }
  Derivation d = derivation_arg(cmd);
  return exponentiate(d, certify_locally_nilpotent(d, uint_arg(cmd, "bound", options_.nilpotency_bound)));
}

unsigned Session::uint_arg(const json& cmd, const char* key, unsigned fallback) const {
  if (!cmd.contains(key)) return fallback;
  return cmd[key].get<unsigned>();
}

MonomialOrder Session::order_arg(const json& cmd) const {
  if (cmd.contains("order")) return parse_order(cmd["order"].get<std::string>());
  return options_.order;
}

json Session::run_ring(const json& cmd) {
  ring_ = make_ring(split_names(cmd.at("vars")));
  polys_.clear();
  maps_.clear();
  derivations_.clear();
  actions_.clear();
  return {{"vars", ring_->variables()}};
}

json Session::run_poly(const json& cmd) {
  Polynomial p = poly_arg(cmd.at("expr"));
  json out{{"poly", poly_json(p)}, {"total_degree", p.total_degree()}};
  if (cmd.contains("name")) {
    std::string name = cmd["name"].get<std::string>();
    polys_.insert_or_assign(name, p);
    out["name"] = name;
  }
  return out;
}

json Session::run_map(const json& cmd) {
  std::vector<std::string> targets;
  if (cmd.contains("targets")) targets = split_names(cmd["targets"]);
  PolyMap F(require_ring(), poly_list_arg(cmd.at("components")), targets);
  std::string name = cmd.at("name").get<std::string>();
  json out{{"name", name}, {"components", poly_list_json(F.components())}, {"targets", F.target_names()}};
  maps_.insert_or_assign(name, std::move(F));
  return out;
}

json Session::run_derivation(const json& cmd) {
  Derivation d(require_ring(), poly_list_arg(cmd.at("images")));
  std::string name = cmd.at("name").get<std::string>();
  json out{{"name", name}, {"images", poly_list_json(d.images())}, {"display", format_derivation(d)}};
  derivations_.insert_or_assign(name, std::move(d));
  return out;
}

json Session::run_apply(const json& cmd) {
  Derivation d = derivation_arg(cmd);
  unsigned k = uint_arg(cmd, "k", 1);
  return {{"k", k}, {"poly", poly_json(apply(d, poly_arg(cmd.at("poly")), k))}};
}

json Session::run_nilpotency(const json& cmd) {
  Derivation d = derivation_arg(cmd);
  return certificate_json(certify_locally_nilpotent(d, uint_arg(cmd, "bound", options_.nilpotency_bound)));
}

json Session::run_exp(const json& cmd) {
  Derivation d = derivation_arg(cmd);
  NilpotencyCertificate cert = certify_locally_nilpotent(d, uint_arg(cmd, "bound", options_.nilpotency_bound));
  GaAction a = exponentiate(d, cert);
  std::vector<std::string> comps = format_action(a);
  json out{{"parameter", a.parameter()},
           {"components", comps},
           {"display", format_tuple(comps)},
           {"certificate", certificate_json(cert)},
           {"group_law", group_law_holds(a)}};
  if (cmd.contains("name")) {
    std::string name = cmd["name"].get<std::string>();
    actions_.insert_or_assign(name, std::move(a));
    out["name"] = name;
  }
  return out;
}

json Session::run_act(const json& cmd) {
  GaAction a = action_arg(cmd);
  Polynomial p = poly_arg(cmd.at("poly"));
  Polynomial image = act(a, p);
  return {{"poly", format_in_powers_of(image, 0)},
          {"deg", degree_json(deg_function(a, p))},
          {"invariant", is_invariant(a, p)}};
}

json Session::run_invariant(const json& cmd) {
  GaAction a = action_arg(cmd);
  json out = json::object();
  if (cmd.contains("poly")) {
    Polynomial p = poly_arg(cmd["poly"]);
    out["invariant"] = is_invariant(a, p);
    out["deg"] = degree_json(deg_function(a, p));
  }
  if (cmd.contains("map")) {
    PolyMap F = map_arg(cmd);
    out["map_invariant"] = check_map_invariant(a, F);
    if (cmd.contains("candidates")) {
      json rows = json::array();
      for (const auto& c : verify_invariant_generators(a, F, poly_list_arg(cmd["candidates"]))) {
        rows.push_back({{"poly", poly_json(c.candidate)},
                        {"invariant", c.invariant},
                        {"in_subalgebra", c.in_subalgebra()},
                        {"expression", c.expression ? json(poly_json(*c.expression)) : json(nullptr)}});
      }
      out["candidates"] = rows;
      out["variables"] = F.target_names();
    }
  }
  return out;
}

json Session::run_jacobian_derivation(const json& cmd) {
  Derivation d = jacobian_derivation(map_arg(cmd));
  json out{{"images", poly_list_json(d.images())}, {"display", format_derivation(d)}};
  if (cmd.contains("name")) {
    std::string name = cmd["name"].get<std::string>();
    derivations_.insert_or_assign(name, d);
    out["name"] = name;
  }
  return out;
}

namespace {

json slice_json(const LocalSlice& s) {
  json j{{"f", poly_json(s.f)}, {"c", poly_json(s.c)}};
  if (s.coefficient_in_map) j["P"] = poly_json(*s.coefficient_in_map);
  return j;
}

}  // namespace

json Session::run_slice(const json& cmd) {
  Derivation d = derivation_arg(cmd);
  auto slice = find_local_slice(d, uint_arg(cmd, "degree_bound", options_.degree_bound));
  if (!slice) return {{"found", false}};
  json out{{"found", true}};
  if (cmd.contains("map")) {
    PolyMap F = map_arg(cmd);
    auto p = slice_coefficient_as_P(d, *slice, F);
    out["P_found"] = p.has_value();
    out["variables"] = F.target_names();
  }
  out["slice"] = slice_json(*slice);
  return out;
}

json Session::run_localization(const json& cmd) {
  Derivation d = derivation_arg(cmd);
  PolyMap F = map_arg(cmd);
  Polynomial r = poly_arg(cmd.at("poly"));
  auto slice = find_local_slice(d, uint_arg(cmd, "degree_bound", options_.degree_bound));
  if (!slice) return {{"found", false}, {"reason", "no local slice within the degree bound"}};
  if (!slice_coefficient_as_P(d, *slice, F))
    return {{"found", false}, {"slice", slice_json(*slice)}, {"reason", "slice coefficient not in Q[F]"}};
  auto witness = verify_localization_identity(d, *slice, F, r, uint_arg(cmd, "power_bound", options_.power_bound));
  json out{{"slice", slice_json(*slice)}, {"found", witness.has_value()}};
  if (witness) {
    out["exponent"] = witness->exponent;
    out["expression"] = poly_json(witness->expression);
    out["variables"] = witness->expression.ring()->variables();
  } else {
    out["reason"] = "no power within the bound";
  }
  return out;
}

json Session::run_fiber(const json& cmd) {
  PolyMap F = map_arg(cmd);
  FiberReport r = fiber_probe(F, rationals_value(cmd.at("point")), order_arg(cmd));
  return {{"point", rationals_json(r.point)},
          {"status", r.empty() ? "empty" : "nonempty"},
          {"dimension", r.dimension},
          {"order", r.witness.order().name()},
          {"basis", poly_list_json(r.witness.basis())}};
}

json Session::run_singular_locus(const json& cmd) {
  SingularityReport r = singular_locus(map_arg(cmd), order_arg(cmd));
  return {{"minors", poly_list_json(r.minors)},
          {"basis", poly_list_json(r.basis.basis())},
          {"dimension", r.dimension},
          {"codimension", r.codimension},
          {"nonsingular_in_codim_1", r.nonsingular_in_codim_1}};
}

json Session::run_scan(const json& cmd) {
  PolyMap F = map_arg(cmd);
  std::vector<std::vector<Rational>> points;
  if (cmd.contains("grid")) {
    const json& g = cmd["grid"];
    Grid grid{rationals_value(g.at("lower")), rationals_value(g.at("upper")),
              g.at("steps").get<std::vector<unsigned>>()};
    if (grid.lower.size() != F.size())
      throw Error(ErrorCode::MalformedGrid, "grid dimension differs from the number of components");
    points = grid_points(grid);
  } else {
    for (const auto& p : cmd.at("points")) points.push_back(rationals_value(p));
  }
  json empties = json::array();
  for (const auto& r : complement_scan(F, points))
    empties.push_back({{"point", rationals_json(r.point)}, {"basis", poly_list_json(r.witness.basis())}});
  return {{"probed", points.size()}, {"empty", empties}};
}

json Session::run_subalgebra(const json& cmd) {
  Polynomial g = poly_arg(cmd.at("poly"));
  std::vector<Polynomial> gens;
  std::vector<std::string> tags;
  if (cmd.contains("map")) {
    PolyMap F = map_arg(cmd);
    gens = F.components();
    tags = F.target_names();
  } else {
    gens = poly_list_arg(cmd.at("generators"));
    for (std::size_t i = 0; i < gens.size(); ++i) tags.push_back("y" + std::to_string(i + 1));
  }
  auto s = subalgebra_membership(g, gens, tags);
  return {{"member", s.has_value()},
          {"expression", s ? json(poly_json(*s)) : json(nullptr)},
          {"variables", tags}};
}

json Session::run_groebner(const json& cmd) {
  MonomialOrder order = order_arg(cmd);
  GroebnerBasis gb = groebner_basis(poly_list_arg(cmd.at("generators")), order, require_ring());
  return {{"order", order.name()},
          {"basis", poly_list_json(gb.basis())},
          {"dimension", dimension(gb)},
          {"unit", gb.is_unit()}};
}

int run_commands(const std::vector<json>& commands, std::ostream& out, const RunOptions& options) {
  Session session(options);
  bool ok = true;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::size_t line = commands[i].value("__line", i + 1);
    json record = session.execute(commands[i], line);
    if (record["status"] != "ok") ok = false;
    out << record.dump() << '\n';
  }
  out.flush();
  return ok ? kExitOk : kExitCommandError;
}

int run_task(std::istream& in, std::ostream& out, const RunOptions& options) {
  std::vector<json> commands;
  try {
    commands = load_task(in);
  } catch (const LoadError& e) {
    json record{{"status", "error"},
                {"line", e.line()},
                {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
    out << record.dump() << '\n';
    return kExitUsage;
  }
  return run_commands(commands, out, options);
}

}  // namespace gaql::cli
