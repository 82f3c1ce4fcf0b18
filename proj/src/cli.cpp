#include "vtx/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "vtx/checkers.hpp"
#include "vtx/constructions.hpp"
#include "vtx/specfile.hpp"
#include "vtx/vla.hpp"

namespace vtx {

namespace {

using json = nlohmann::ordered_json;

std::string format_poly(const RatPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    for (Var v : {Var::x0, Var::x1, Var::x2})
      if (d[idx(v)] != 0)
        out += std::string("*") + var_name(v) + "^" +
               std::to_string(d[idx(v)]);
  }
  return out;
}

std::string format_expr(const RationalExpr& e) {
  std::string denom;
  auto factor = [&denom](const std::string& base, long p) {
    if (p == 0) return;
    if (!denom.empty()) denom += " ";
    denom += base;
    if (p != 1) denom += "^" + std::to_string(p);
  };
  factor(var_name(e.a), e.r);
  factor(var_name(e.b), e.s);
  factor("(" + std::string(var_name(e.a)) +
             (e.sign == Sign::minus ? "-" : "+") + var_name(e.b) + ")",
         e.t);
  std::string g = format_poly(e.g);
  return denom.empty() ? g : "(" + g + ") / (" + denom + ")";
}

std::string window_str(Window w) {
  return std::to_string(w.lo) + ":" + std::to_string(w.hi);
}

void emit_text(const Report& r, std::ostream& out) {
  out << "structure: " << r.structure << "\n";
  out << "window: " << window_str(r.window) << "\n";
  for (const auto& e : r.entries) {
    out << "  " << e.name << ": " << status_name(e.status);
    if (!e.witness.empty()) out << "  [" << e.witness << "]";
    out << "\n";
  }
  out << "verdict: " << status_name(r.verdict()) << "\n";
}

json report_json(const Report& r) {
  json j;
  j["structure"] = r.structure;
  j["window"] = window_str(r.window);
  j["checks"] = json::array();
  for (const auto& e : r.entries) {
    json c;
    c["name"] = e.name;
    c["status"] = status_name(e.status);
    if (!e.witness.empty()) c["witness"] = e.witness;
    j["checks"].push_back(c);
  }
  return j;
}

int exit_code(const Report& r) {
  switch (r.verdict()) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::inconclusive: return 2;
  }
  return 2;
}

Window parse_window(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--window expects lo:hi");
  return Window{std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

// Integer window spanning the weights of a space.
Window span_window(const GradedSpace& s) {
  auto floor_of = [](const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (q * denominator(r) > numerator(r)) --q;
    return q.convert_to<int>();
  };
  Rational mx = s.max_weight();
  int hi = floor_of(mx);
  if (Rational(hi) < mx) ++hi;
  return Window{floor_of(s.min_weight()), hi};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report coalgebra_reports(const VertexCoalgebra& C, Window w) {
  Report r = run_coalgebra_suite(C, w);
  r.absorb(check_skew_symmetry(C, w));
  r.absorb(check_dstar_laws(C, w));
  return r;
}

struct Emitted {
  Report report;
  json extra;  // merged into the json object when non-null
  std::string payload;  // serialized structure, printed when no -o is given
};

Emitted do_validate(const SpecFile& f, Window w, const std::string& convention,
                    long jk_bound, long mode_bound) {
  Emitted e;
  if (const auto* A = std::get_if<VertexAlgebra>(&f.value)) {
    VertexCoalgebra C = dualize(*A, span_window(A->space));
    e.report = coalgebra_reports(C, w);
    e.report.structure = f.name;
  } else if (const auto* C = std::get_if<VertexCoalgebra>(&f.value)) {
    e.report = coalgebra_reports(*C, w);
  } else if (const auto* L = std::get_if<VertexLieAlgebra>(&f.value)) {
    e.report = affinize(*L, mode_bound, convention == "printed")
                   .check_lie_axioms();
  } else if (const auto* M = std::get_if<Comodule>(&f.value)) {
    e.report = run_comodule_suite(*M, w);
  } else if (const auto* V = std::get_if<VocData>(&f.value)) {
    e.report = coalgebra_reports(V->base, w);
    e.report.absorb(check_virasoro(*V, jk_bound));
  }
  e.report.window = w;
  return e;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact checker for graded vertex coalgebra structures"};
  app.require_subcommand(1);

  std::string file, output, format = "text", convention = "standard";
  std::string window_arg, functional, state, side = "right";
  long jk_bound = 2, mode_bound = 4, cutoff = 4, zero_cap = 2;
  long dim = 1, degree = 2;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--window", window_arg, "check window lo:hi");
    cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--convention", convention, "standard|printed")
        ->check(CLI::IsMember({"standard", "printed"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "run the axiom suite");
  validate->add_option("file", file)->required();
  validate->add_option("--jk-bound", jk_bound, "Virasoro commutator range");
  validate->add_option("--mode-bound", mode_bound, "vertex-Lie mode range");
  add_common(validate);

  CLI::App* dual = app.add_subcommand("dualize", "graded dual in a window");
  dual->add_option("file", file)->required();
  dual->add_option("-o,--output", output, "write the dual spec file here");
  add_common(dual);

  CLI::App* env = app.add_subcommand("envelope", "enveloping vertex algebra");
  env->add_option("file", file)->required();
  env->add_option("--weight-cutoff", cutoff, "weight slice bound")->required();
  env->add_option("--zero-cap", zero_cap, "weight-0 multiplicity cap");
  env->add_option("-o,--output", output, "write the result spec file here");
  add_common(env);

  CLI::App* cls = app.add_subcommand("classical", "U(L) for abelian L");
  cls->add_option("--dim", dim, "number of generators")->required();
  cls->add_option("--degree", degree, "monomial degree cutoff")->required();
  add_common(cls);

  CLI::App* corr = app.add_subcommand("correlate", "rational reconstruction");
  corr->add_option("file", file)->required();
  corr->add_option("--functional", functional, "three labels, comma separated")
      ->required();
  corr->add_option("--state", state, "source basis label")->required();
  corr->add_option("--side", side, "right|left")
      ->check(CLI::IsMember({"right", "left"}));
  add_common(corr);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 64;
  }

  try {
    Window w{-6, 6};
    if (!window_arg.empty()) w = parse_window(window_arg);

    Emitted e;
    if (app.got_subcommand(validate)) {
      e = do_validate(parse_spec_file(read_file(file)), w, convention,
                      jk_bound, mode_bound);
    } else if (app.got_subcommand(dual)) {
      SpecFile f = parse_spec_file(read_file(file));
      SpecFile g;
      if (const auto* A = std::get_if<VertexAlgebra>(&f.value)) {
        Window dw = window_arg.empty() ? span_window(A->space) : w;
        VertexCoalgebra C = dualize(*A, dw);
        e.report = run_coalgebra_suite(C, w);
        g.name = f.name + "-dual";
        g.kind = "vertex-coalgebra";
        C.name = g.name;
        g.value = std::move(C);
      } else if (const auto* C = std::get_if<VertexCoalgebra>(&f.value)) {
        Window dw = window_arg.empty() ? span_window(C->space) : w;
        VertexAlgebra A = dualize_back(*C, dw);
        e.report.structure = A.name;
        e.report.add_pass_fail("dualize_back", true);
        g.name = f.name + "-dual";
        g.kind = "vertex-algebra";
        A.name = g.name;
        g.value = std::move(A);
      } else {
        throw std::invalid_argument(
            "dualize expects a vertex-algebra or vertex-coalgebra file");
      }
      e.payload = serialize_spec_file(g);
    } else if (app.got_subcommand(env)) {
      SpecFile f = parse_spec_file(read_file(file));
      const auto* L = std::get_if<VertexLieAlgebra>(&f.value);
      if (!L) throw std::invalid_argument("envelope expects a vertex-lie file");
      Envelope E(*L, static_cast<int>(cutoff), static_cast<int>(zero_cap));
      e.report = E.lie().check_lie_axioms();
      SpecFile g;
      g.name = f.name + "-envelope";
      g.kind = "vertex-algebra";
      VertexAlgebra A = E.to_vertex_algebra();
      A.name = g.name;
      g.value = std::move(A);
      e.payload = serialize_spec_file(g);
    } else if (app.got_subcommand(cls)) {
      BialgebraData B = classical_enveloping(dim, degree);
      e.report = check_classical(B);
      json d = json::array();
      for (const auto& [u, tv] : B.induced) {
        json row;
        row["u"] = u;
        row["terms"] = json::array();
        for (const auto& [key, c] : tv.c)
          row["terms"].push_back(
              {{"left", key[0]}, {"right", key[1]}, {"coeff", to_string(c)}});
        d.push_back(row);
      }
      e.extra["delta"] = d;
      std::string table;
      for (const auto& [u, tv] : B.induced) {
        table += "Delta(" + u + ") =";
        bool first = true;
        for (const auto& [key, c] : tv.c) {
          table += first ? " " : " + ";
          table += to_string(c) + "*(" + key[0] + "|" + key[1] + ")";
          first = false;
        }
        table += "\n";
      }
      e.payload = table;
    } else if (app.got_subcommand(corr)) {
      SpecFile f = parse_spec_file(read_file(file));
      const VertexCoalgebra* C = std::get_if<VertexCoalgebra>(&f.value);
      if (!C && std::holds_alternative<VocData>(f.value))
        C = &std::get<VocData>(f.value).base;
      if (!C)
        throw std::invalid_argument(
            "correlate expects a vertex-coalgebra or voc file");
      std::stringstream ss(functional);
      std::string part;
      TensorKey key;
      while (std::getline(ss, part, ',')) key.push_back(part);
      if (key.size() != 3)
        throw std::invalid_argument("--functional needs three labels");
      DualFunctional vp;
      vp.add(key, 1);
      CorrelationResult cr =
          correlation(*C, vp, unit_vec(state),
                      side == "right" ? CorrKind::right : CorrKind::left, w);
      e.report = cr.report;
      if (cr.match.status == MatchStatus::ok)
        e.report.add("reconstructed_expression", Status::pass,
                     format_expr(cr.match.expr));
    }

    if (!output.empty() && !e.payload.empty()) {
      std::ofstream of(output, std::ios::binary);
      if (!of) throw std::invalid_argument("cannot write " + output);
      of << e.payload;
    }
    if (format == "json") {
      json j = report_json(e.report);
      for (auto& [k, v] : e.extra.items()) j[k] = v;
      out << j.dump(2) << "\n";
    } else {
      if (output.empty() && !e.payload.empty()) out << e.payload;
      emit_text(e.report, out);
    }
    return exit_code(e.report);
  } catch (const SpecError& ex) {
    err << "error: " << ex.what() << "\n";
    return 64;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 64;
  }
}

}  // namespace vtx
