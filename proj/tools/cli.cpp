#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "yuppie/error.hpp"
#include "yuppie/syntax.hpp"

namespace yuppie::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  Program program;
  std::string def;
};

Loaded load(const std::string& path, const std::string& def) {
  Loaded l{parse_program(read_file(path), level_for_path(path)), def};
  if (l.def.empty()) l.def = default_definition(l.program).name;
  return l;
}

Value value_of(const std::string& path, const std::string& def) {
  Loaded l = load(path, def);
  return elaborate_definition(l.program, l.def);
}

ArrowChi chi_of(const Value& v) {
  if (const auto* c = std::get_if<ChartValue>(&v)) return translate(c->chart, c->input);
  return as_arrow_chi(v);
}

Json types_json(const BaseType& s, const BaseType& t) {
  return Json{{"source", s.to_string()}, {"target", t.to_string()}};
}

Json describe(const std::string& name, const Value& v) {
  Json j{{"name", name}};
  if (const auto* c = std::get_if<Comb>(&v)) {
    j["level"] = "comb";
    j.update(types_json(c->source(), c->target()));
  } else if (const auto* a = std::get_if<ArrowA>(&v)) {
    j["level"] = "alloc";
    j.update(types_json(a->source, a->target));
    j["heap"] = a->heap.to_string();
  } else if (const auto* h = std::get_if<ArrowChi>(&v)) {
    j["level"] = "hide";
    j.update(types_json(h->source, h->target));
    j["heap"] = h->inner.heap.to_string();
    j["garbage"] = h->garbage.to_string();
  } else {
    const auto& f = std::get<ChartValue>(v);
    j["level"] = "flowchart";
    j["input"] = f.input.to_string();
    j["output"] = f.output.to_string();
  }
  return j;
}

Json term_json(const Comb& c) {
  Json j{{"term", to_string(c)}};
  j.update(types_json(c.source(), c.target()));
  return j;
}

Json error_json(const Error& e) {
  Json err{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"line", nullptr}, {"column", nullptr}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = p->line();
    err["column"] = p->column();
  }
  return Json{{"error", std::move(err)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluator for reversible quantum combinators and their arrow extensions"};
  app.require_subcommand(1);

  std::string file, file_b, def, def_b, backend = "unitary", level = "iso", state_file;

  auto* check = app.add_subcommand("check", "Print the inferred type of every definition");
  check->add_option("file", file, "Program file")->required();

  auto* eval = app.add_subcommand("eval", "Print the denotation of a definition");
  eval->add_option("file", file, "Program file")->required();
  eval->add_option("--backend", backend, "unitary, isometry, choi or bij")
      ->check(CLI::IsMember({"unitary", "isometry", "choi", "bij"}));
  eval->add_option("--def", def, "Definition (default: the last one)");

  auto* equiv = app.add_subcommand("equiv", "Decide semantic equality of two definitions");
  equiv->add_option("a", file, "First program file")->required();
  equiv->add_option("b", file_b, "Second program file")->required();
  equiv->add_option("--level", level, "iso or chan")->check(CLI::IsMember({"iso", "chan"}));
  equiv->add_option("--def-a", def, "Definition in the first file");
  equiv->add_option("--def-b", def_b, "Definition in the second file");

  auto* invert_cmd = app.add_subcommand("invert", "Print the inverse of a combinator");
  invert_cmd->add_option("file", file, "Program file")->required();
  invert_cmd->add_option("--def", def, "Definition");

  auto* expand = app.add_subcommand("expand", "Print a combinator with all macros and types spelled out");
  expand->add_option("file", file, "Program file")->required();
  expand->add_option("--def", def, "Definition");

  std::string fc_mode;
  auto* flow = app.add_subcommand("flowchart", "Check, translate or run a flowchart");
  flow->add_option("mode", fc_mode, "translate, check or run")
      ->required()
      ->check(CLI::IsMember({"translate", "check", "run"}));
  flow->add_option("file", file, "Flowchart file")->required();
  flow->add_option("--def", def, "Definition");

  auto* apply = app.add_subcommand("apply", "Apply a channel to a density matrix");
  apply->add_option("file", file, "Program file")->required();
  apply->add_option("--state", state_file, "JSON density matrix")->required();
  apply->add_option("--def", def, "Definition");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Json result;
    if (*check) {
      Loaded l = load(file, "");
      Json defs = Json::array();
      for (const auto& d : l.program.defs) defs.push_back(describe(d.name, elaborate_definition(l.program, d.name)));
      result = Json{{"definitions", std::move(defs)}};
    } else if (*eval) {
      const Value v = value_of(file, def);
      if (backend == "unitary") {
        result = matrix_json(eval_unitary(as_comb(v)), "unitary");
      } else if (backend == "isometry") {
        result = matrix_json(iso_of(as_arrow_a(v)).matrix, "isometry");
      } else if (backend == "choi") {
        result = channel_json(channel_of(chi_of(v)));
      } else {
        result = bijection_json(eval_bij(as_comb(v)));
      }
    } else if (*equiv) {
      const Value a = value_of(file, def);
      const Value b = value_of(file_b, def_b);
      bool equal;
      double distance;
      if (level == "iso") {
        const ArrowA x = as_arrow_a(a), y = as_arrow_a(b);
        equal = iso_equal(x, y);
        distance = max_abs_diff(iso_of(x).matrix, iso_of(y).matrix);
      } else {
        const ArrowChi x = chi_of(a), y = chi_of(b);
        const Channel cx = channel_of(x), cy = channel_of(y);
        if (!(x.source == y.source) || !(x.target == y.target)) {
          fail(ErrorKind::TypeMismatch, "arrows of different types");
        }
        equal = chan_equal(cx, cy);
        distance = max_abs_diff(cx.choi(), cy.choi());
      }
      result = Json{{"equal", equal}, {"level", level}, {"distance", distance}};
    } else if (*invert_cmd) {
      result = term_json(invert(as_comb(value_of(file, def))));
    } else if (*expand) {
      result = term_json(as_comb(value_of(file, def)));
    } else if (*flow) {
      const Value v = value_of(file, def);
      const auto* c = std::get_if<ChartValue>(&v);
      if (!c) fail(ErrorKind::TypeMismatch, "definition is not a flowchart");
      if (fc_mode == "check") {
        result = Json{{"chart", to_string(c->chart)}, {"input", c->input.to_string()}, {"output", c->output.to_string()}};
      } else if (fc_mode == "translate") {
        const ArrowChi a = translate(c->chart, c->input);
        result = types_json(a.source, a.target);
        result["heap"] = a.inner.heap.to_string();
        result["garbage"] = a.garbage.to_string();
        result["term"] = to_string(a);
      } else {
        if (!(c->input == ContextSum::zero())) fail(ErrorKind::ContextShape, "only charts from the empty context run");
        const RunResult r = run_flowchart(c->chart);
        Json branches = Json::array();
        for (const auto& b : r.branches) {
          branches.push_back(Json{{"context", b.names}, {"weight", b.weight}, {"state", matrix_json(b.state, "density")}});
        }
        result = Json{{"output", r.output.to_string()}, {"branches", std::move(branches)}, {"state", matrix_json(r.state, "density")}};
      }
    } else if (*apply) {
      const Channel ch = channel_of(chi_of(value_of(file, def)));
      Json state;
      try {
        state = Json::parse(read_file(state_file));
      } catch (const Json::parse_error& e) {
        fail(ErrorKind::BadState, std::string("state file is not JSON: ") + e.what());
      }
      result = matrix_json(apply_channel(ch, matrix_from_json(state)), "density");
    }
    out << dump(result) << "\n";
    return 0;
  } catch (const Error& e) {
    out << dump(error_json(e)) << "\n";
    return 1;
  }
}

}  // namespace yuppie::cli
