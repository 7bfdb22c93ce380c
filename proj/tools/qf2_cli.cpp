// Copyright 2026 The qf2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qf2_cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string_view>

#include "qf2/parse.hpp"
#include "qf2/quaternion.hpp"

namespace qf2::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finished command: exit code plus report.
struct Report {
  int code = kOk;
  Json answer = Json::object();
  std::optional<Json> certificate;
  Json verification = Json::object();
};

std::uint64_t parse_uint(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    int base = 10;
    std::string body = text;
    if (text.rfind("0b", 0) == 0) {
      base = 2;
      body = text.substr(2);
    } else if (text.rfind("0x", 0) == 0) {
      base = 16;
      body = text.substr(2);
    }
    const std::uint64_t v = std::stoull(body, &used, base);
    if (used != body.size() || body.empty()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not a number: '" + text + "'");
  }
}

// "q" or "2^k".
unsigned parse_field_size(const std::string& text) {
  unsigned k = 0;
  if (text.rfind("2^", 0) == 0) {
    k = static_cast<unsigned>(parse_uint(text.substr(2), "--field"));
  } else {
    const std::uint64_t q = parse_uint(text, "--field");
    if (q < 2 || (q & (q - 1)) != 0) throw UsageError("--field: field size must be a power of two, got '" + text + "'");
    while ((std::uint64_t{1} << k) < q) ++k;
  }
  if (k < 1 || k > Field::kMaxDegree) throw UsageError("--field: need 2 <= q <= 2^16, got '" + text + "'");
  return k;
}

std::string bits(std::uint32_t m) {
  std::string s;
  for (int i = 31; i >= 0; --i)
    if (!s.empty() || ((m >> i) & 1)) s += ((m >> i) & 1) ? '1' : '0';
  return "0b" + (s.empty() ? std::string("0") : s);
}

RatFunc operand(const FieldPtr& F, const std::string& name, const std::string& text) {
  try {
    return parse_ratfunc(F, text);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + " '" + text + "': " + e.what());
  }
}

Json places_json(const std::vector<Place>& places) {
  Json out = Json::array();
  for (const Place& p : places) out.push_back(p.to_string());
  return out;
}

Json certificate_json(const AnisotropyCertificate& c) {
  Json j;
  j["place"] = c.place.to_string();
  j["kind"] = c.kind == AnisotropyCertificate::Kind::kUnramified ? "unramified" : "ramified";
  j["symbols"] = {c.first_symbol, c.second_symbol};
  j["a1"] = c.a1.to_string();
  j["a2"] = c.a2.to_string();
  j["a3"] = c.a3.to_string();
  j["a4"] = c.a4.to_string();
  return j;
}

Json quat_json(const Quaternion& x) {
  Json out = Json::array();
  for (const RatFunc& c : x.coords) out.push_back(c.to_string());
  return out;
}

// "0" when zero, else the coordinates.
std::string residual(const Quaternion& x) {
  if (x.is_zero()) return "0";
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) s += (i ? ", " : "") + x.coords[i].to_string();
  return s + ")";
}

void render_text(const Json& request, const Report& r, std::ostream& out) {
  auto show = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (request["command"] == "symbol") {
    out << show(r.answer.begin().value()) << "\n";
  } else {
    for (const auto& [k, v] : r.answer.items()) out << k << ": " << show(v) << "\n";
  }
  if (r.certificate)
    for (const auto& [k, v] : r.certificate->items()) out << "certificate." << k << ": " << show(v) << "\n";
  for (const auto& [k, v] : r.verification.items()) out << "check " << k << " = " << show(v) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic forms and quaternion algebras over GF(2^k)(t).", "qf2"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_text = "2", modulus_text;
  std::uint64_t seed = 1;
  int max_degree = BinarySolveOptions{}.max_degree;
  unsigned threads = 1;
  bool json = false;
  app.add_option("--field", field_text, "Field size q = 2^k, as q or 2^k")->capture_default_str();
  app.add_option("--modulus", modulus_text, "Defining polynomial of GF(2^k) as a bit mask (0b..., 0x... or decimal)");
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--max-degree", max_degree, "Degree budget of the binary norm search")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for the binary norm search")->capture_default_str();
  app.add_flag("--json", json, "Machine-readable output");

  std::map<std::string, std::string> ops;
  auto opt = [&](CLI::App* sub, const std::string& name, const std::string& help, bool required = true) {
    auto* o = sub->add_option("--" + name, ops[name], help);
    if (required) o->required();
  };
  auto* sq = app.add_subcommand("solve-quaternary", "Find a zero of a1 N(a2) + a3 N(a4) or prove there is none");
  for (const char* n : {"a1", "a2", "a3", "a4"}) opt(sq, n, "coefficient");
  auto* sb = app.add_subcommand("solve-binary", "Solve scale (x^2 + xy + param y^2) = target");
  opt(sb, "scale", "scale (default 1)", false);
  opt(sb, "param", "Artin-Schreier parameter");
  opt(sb, "target", "right-hand side");
  auto* sy = app.add_subcommand("symbol", "The symbol [a, P)");
  opt(sy, "a", "argument");
  opt(sy, "place", "irreducible polynomial or inf");
  auto* mn = app.add_subcommand("minimize", "Minimal form of scale (x^2 + xy + param y^2)");
  opt(mn, "param", "Artin-Schreier parameter");
  opt(mn, "scale", "scale (default 1)", false);
  auto* is = app.add_subcommand("is-split", "Is [a, b> a matrix algebra?");
  opt(is, "a", "i^2 + i = a");
  opt(is, "b", "j^2 = b");
  auto* rp = app.add_subcommand("ramified-places", "Places where [a, b> is ramified");
  opt(rp, "a", "i^2 + i = a");
  opt(rp, "b", "j^2 = b");
  auto* cr = app.add_subcommand("construct-ramified", "An algebra ramified exactly at the given places");
  opt(cr, "places", "comma-separated places, inf for infinity");
  auto* es = app.add_subcommand("embed-subfield", "u in [a, b> with u^2 + u = c");
  opt(es, "a", "i^2 + i = a");
  opt(es, "b", "j^2 = b");
  opt(es, "c", "parameter of the subfield");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  CLI::App* cmd = app.get_subcommands().front();

  Json request;
  request["command"] = cmd->get_name();
  Report r;
  try {
    const unsigned k = parse_field_size(field_text);
    std::optional<std::uint32_t> modulus;
    if (!modulus_text.empty()) modulus = static_cast<std::uint32_t>(parse_uint(modulus_text, "--modulus"));
    FieldPtr F;
    try {
      F = Field::make(k, modulus);
    } catch (const MathError& e) {
      throw UsageError(std::string("--modulus: ") + e.what());
    }
    request["field"] = {{"q", std::uint64_t{1} << k}, {"k", k}, {"modulus", bits(F->modulus())}};
    Json operands = Json::object();
    auto given = [&](const std::string& name) {
      const CLI::Option* o = cmd->get_option_no_throw("--" + name);
      return o != nullptr && o->count() > 0;
    };
    for (const auto& [name, text] : ops)
      if (given(name)) operands[name] = text;
    request["operands"] = operands;
    request["seed"] = seed;
    request["max_degree"] = max_degree;

    std::mt19937_64 rng(seed);
    BinarySolveOptions bopts;
    bopts.max_degree = max_degree;
    bopts.threads = threads;
    auto get = [&](const std::string& name) { return operand(F, name, ops[name]); };
    auto get_or_one = [&](const std::string& name) {
      return given(name) ? get(name) : RatFunc::one(F);
    };
    auto get_place = [&](const std::string& name) {
      try {
        return parse_place(F, ops[name]);
      } catch (const ParseError& e) {
        throw UsageError("--" + name + " '" + ops[name] + "': " + e.what());
      }
    };

    if (cmd == sq) {
      const RatFunc a1 = get("a1"), a2 = get("a2"), a3 = get("a3"), a4 = get("a4");
      const QuaternaryForm Q = QuaternaryForm::from_coefficients(a1, a2, a3, a4);
      QuaternaryOptions qopts;
      qopts.binary = bopts;
      const QuaternaryResult res = solve_quaternary(Q, rng, qopts);
      switch (res.status) {
        case QuaternaryResult::Status::kIsotropic: {
          r.answer["status"] = "isotropic";
          Json v = Json::array();
          for (const RatFunc& x : *res.zero) v.push_back(x.to_string());
          r.answer["zero"] = v;
          if (res.common_value) r.answer["common_value"] = res.common_value->value.to_string();
          r.verification["Q(v)"] = Q.evaluate(*res.zero).to_string();
          r.verification["[v == 0]"] = is_zero(*res.zero) ? "1" : "0";
          break;
        }
        case QuaternaryResult::Status::kAnisotropic:
          r.code = kNoSolution;
          r.answer["status"] = "anisotropic";
          r.certificate = certificate_json(*res.certificate);
          r.verification["certificate rejected"] = res.certificate->check() ? "0" : "1";
          break;
        case QuaternaryResult::Status::kBudgetExhausted:
          r.code = kBudget;
          r.answer["status"] = "budget_exhausted";
          r.answer["note"] = res.note;
          break;
      }
    } else if (cmd == sb) {
      const NormEquation eq{BinaryNormForm{get_or_one("scale"), get("param")}, get("target")};
      if (eq.form.scale.is_zero()) throw UsageError("--scale: must be nonzero");
      // Local obstructions first: they prove there is no solution.
      std::set<Place> cands;
      for (const RatFunc* x : {&eq.form.scale, &eq.form.param, &eq.target})
        for (const Place& p : finite_support(*x)) cands.insert(p);
      cands.insert(Place::infinite());
      std::optional<Place> obstruction;
      if (eq.target.is_zero()) {
        r.answer["x"] = "0";
        r.answer["y"] = "0";
        r.verification["scale*N(x,y) - target"] = "0";
      } else {
        for (const Place& p : cands)
          if (!locally_represents(eq.form, eq.target, p)) {
            obstruction = p;
            break;
          }
        if (obstruction) {
          r.code = kNoSolution;
          r.answer["status"] = "no_solution";
          r.certificate = Json{{"place", obstruction->to_string()}, {"reason", "target is not a local norm"}};
          r.verification["locally represented at place"] = locally_represents(eq.form, eq.target, *obstruction) ? "1" : "0";
        } else {
          try {
            const BinarySolution s = solve_binary(eq, rng, bopts);
            r.answer["x"] = s.x.to_string();
            r.answer["y"] = s.y.to_string();
            r.verification["scale*N(x,y) - target"] = (eq.form.evaluate(s.x, s.y) + eq.target).to_string();
          } catch (const BudgetExhausted& e) {
            r.code = kBudget;
            r.answer["status"] = "budget_exhausted";
            r.answer["note"] = e.what();
          }
        }
      }
    } else if (cmd == sy) {
      r.answer["symbol"] = symbol(get("a"), get_place("place"));
    } else if (cmd == mn) {
      const RatFunc param = get("param");
      const MinimizeResult m = minimize(BinaryNormForm{get_or_one("scale"), param});
      r.answer["scale"] = m.form.scale.to_string();
      r.answer["param"] = m.form.param.to_string();
      r.answer["shift"] = m.shift.h.to_string();
      const RatFunc& h = m.shift.h;
      r.verification["param_in - (param_out + h^2 + h)"] = (param + m.form.param + h.square() + h).to_string();
    } else if (cmd == is || cmd == rp) {
      const QuaternionAlgebra A{get("a"), get("b")};
      if (A.b.is_zero()) throw UsageError("--b: must be nonzero");
      const std::vector<Place> ram = ramified_places(A);
      if (cmd == is) {
        try {
          const SplitResult s = is_split(A, rng, bopts);
          r.answer["split"] = s.split;
          if (s.split) {
            r.answer["zero_divisor"] = quat_json(*s.zero_divisor);
            r.verification["nrd(z)"] = nrd(*s.zero_divisor).to_string();
            r.verification["[z == 0]"] = s.zero_divisor->is_zero() ? "1" : "0";
          } else {
            r.answer["ramified_places"] = places_json(ram);
          }
        } catch (const BudgetExhausted& e) {
          r.code = kBudget;
          r.answer["status"] = "budget_exhausted";
          r.answer["note"] = e.what();
        }
      } else {
        r.answer["ramified_places"] = places_json(ram);
      }
      r.verification["#ramified mod 2"] = std::to_string(ram.size() % 2);
    } else if (cmd == cr) {
      std::vector<Place> want;
      try {
        want = parse_place_list(F, ops["places"]);
      } catch (const ParseError& e) {
        throw UsageError("--places '" + ops["places"] + "': " + e.what());
      }
      const QuaternionAlgebra A = construct_ramified(want, F, rng);
      const std::vector<Place> got = ramified_places(A);
      r.answer["a"] = A.a.to_string();
      r.answer["b"] = A.b.to_string();
      r.answer["ramified_places"] = places_json(got);
      std::set<Place> diff(want.begin(), want.end());
      for (const Place& p : got)
        if (!diff.erase(p)) diff.insert(p);
      r.verification["#(requested xor ramified)"] = std::to_string(diff.size());
    } else if (cmd == es) {
      const QuaternionAlgebra A{get("a"), get("b")};
      if (A.b.is_zero()) throw UsageError("--b: must be nonzero");
      const RatFunc c = get("c");
      QuaternaryOptions qopts;
      qopts.binary = bopts;
      try {
        const Quaternion u = embed_subfield(A, c, rng, qopts);
        r.answer["u"] = quat_json(u);
        r.verification["u^2 + u - c"] = residual(u * u + u + Quaternion::scalar(A, c));
        r.verification["coefficient of i - 1"] = (u.coords[1] + RatFunc::one(F)).to_string();
      } catch (const NotSplitByExtension& e) {
        r.code = kNoSolution;
        r.answer["status"] = "not_split";
        r.certificate = certificate_json(e.certificate());
        r.verification["certificate rejected"] = e.certificate().check() ? "0" : "1";
      } catch (const BudgetExhausted& e) {
        r.code = kBudget;
        r.answer["status"] = "budget_exhausted";
        r.answer["note"] = e.what();
      }
    }
  } catch (const UsageError& e) {
    err << "qf2: " << e.what() << "\n";
    return kUsage;
  } catch (const MathError& e) {
    err << "qf2: " << e.what() << "\n";
    return kUsage;
  }

  if (json) {
    Json doc;
    doc["request"] = request;
    doc["answer"] = r.answer;
    if (r.certificate) doc["certificate"] = *r.certificate;
    doc["verification"] = r.verification;
    out << doc.dump(2) << "\n";
  } else {
    render_text(request, r, out);
  }
  return r.code;
}

}  // namespace qf2::cli
