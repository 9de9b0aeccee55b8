/*
 * Copyright 2026 The cayleycpp authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

//! Command-line front end.  Every subcommand reads a semigroup from the
//! built-in catalog (--catalog KEY) or from a JSON file, runs one analysis,
//! and prints either a human-readable report or, with --format=data, a
//! structured JSON document {"command", "status", "result", "timing_ms"}.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 mathematical verdict
//! failure (a counterexample or broken equivalence was found).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cayley/catalog.hpp"
#include "cayley/enumerate.hpp"
#include "cayley/exception.hpp"
#include "cayley/expansions.hpp"
#include "cayley/green.hpp"
#include "cayley/io.hpp"
#include "cayley/machine.hpp"
#include "cayley/semigroup.hpp"
#include "cayley/small_semigroups.hpp"
#include "cayley/tower.hpp"
#include "cayley/verification.hpp"

namespace {

using cayley::element_id;
using cayley::FiniteSemigroup;
using cayley::Word;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdict = 2;

//! Where a subcommand gets its semigroup from.
struct InputSpec {
  std::string catalog_key;
  std::string file;

  FiniteSemigroup resolve() const {
    if (!catalog_key.empty() && !file.empty()) {
      throw cayley::CayleyError("give either --catalog or a file, not both");
    }
    if (!catalog_key.empty()) {
      return cayley::catalog_semigroup(catalog_key);
    }
    if (!file.empty()) {
      return cayley::load_semigroup_file(file);
    }
    throw cayley::CayleyError("no input semigroup: use --catalog KEY (" +
                              cayley::catalog_keys_text() +
                              ") or give a file");
  }
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--catalog", in.catalog_key,
                  "built-in semigroup key (" + cayley::catalog_keys_text() +
                      ")");
  cmd->add_option("file", in.file, "semigroup JSON file");
}

//! One element from a name or a numeric id.
element_id parse_element(FiniteSemigroup const& s, std::string const& token) {
  element_id const by_name = s.element_by_name(token);
  if (by_name != cayley::UNDEFINED) {
    return by_name;
  }
  try {
    std::size_t pos = 0;
    int const v = std::stoi(token, &pos);
    if (pos == token.size() && v >= 0 && v < s.order()) {
      return v;
    }
  } catch (std::exception const&) {
  }
  throw cayley::CayleyError("unknown element '" + token + "'");
}

std::vector<std::string> split_csv(std::string const& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char const ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !text.empty()) {
    out.push_back(cur);
  }
  return out;
}

std::vector<element_id> parse_elements(FiniteSemigroup const& s,
                                       std::string const& csv) {
  std::vector<element_id> out;
  for (std::string const& token : split_csv(csv)) {
    out.push_back(parse_element(s, token));
  }
  return out;
}

std::string join_names(FiniteSemigroup const& s, Word const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += s.name_of(w[i]);
  }
  return out;
}

json names_json(FiniteSemigroup const& s, Word const& w) {
  json out = json::array();
  for (element_id const x : w) {
    out.push_back(s.name_of(x));
  }
  return out;
}

//! The action selected by --mode (full | ideal=<ids> | trace=<element>).
cayley::ActionPtr make_action(FiniteSemigroup const& s,
                              std::string const& mode) {
  if (mode.empty() || mode == "full") {
    return cayley::Action::full(s);
  }
  if (mode.rfind("ideal=", 0) == 0) {
    return cayley::Action::on_ideal(s, parse_elements(s, mode.substr(6)));
  }
  if (mode.rfind("trace=", 0) == 0) {
    element_id const rep = parse_element(s, mode.substr(6));
    cayley::GreenStructure const g = cayley::green(s);
    return cayley::Action::on_trace(
        s, g.j_classes[static_cast<std::size_t>(
               g.j_class_of[static_cast<std::size_t>(rep)])]);
  }
  throw cayley::CayleyError("bad --mode '" + mode +
                            "': use full, ideal=<ids> or trace=<element>");
}

//! Per-run report state shared by the subcommand handlers.
struct Run {
  std::string command;
  bool verdict_failed = false;
  json result = json::object();
  std::ostringstream text;
  std::optional<std::pair<std::string, std::string>> out_file;  // path, body
};

std::string table_text(FiniteSemigroup const& s) {
  std::size_t width = 1;
  for (std::string const& n : s.names()) {
    width = std::max(width, n.size());
  }
  std::ostringstream out;
  auto pad = [&out, width](std::string const& t) {
    out << t << std::string(width + 1 - t.size(), ' ');
  };
  pad("");
  out << "| ";
  for (element_id b = 0; b < s.order(); ++b) {
    pad(s.name_of(b));
  }
  out << "\n" << std::string(width + 1, '-') << "+-"
      << std::string((width + 1) * static_cast<std::size_t>(s.order()), '-')
      << "\n";
  for (element_id a = 0; a < s.order(); ++a) {
    pad(s.name_of(a));
    out << "| ";
    for (element_id b = 0; b < s.order(); ++b) {
      pad(s.name_of(s.product(a, b)));
    }
    out << "\n";
  }
  return out.str();
}

void cmd_show(Run& run, FiniteSemigroup const& s) {
  run.text << (s.name().empty() ? std::string("(unnamed)") : s.name())
           << ": order " << s.order() << "\n" << table_text(s);
  run.result["name"] = s.name();
  run.result["order"] = s.order();
  run.result["elements"] = s.names();
  run.result["table"] = s.rows();
  run.result["is_monoid"] = s.is_monoid();
  run.result["has_zero"] = s.has_zero();
  if (s.identity()) {
    run.text << "identity: " << s.name_of(*s.identity()) << "\n";
    run.result["identity"] = s.name_of(*s.identity());
  }
  if (s.zero()) {
    run.text << "zero: " << s.name_of(*s.zero()) << "\n";
    run.result["zero"] = s.name_of(*s.zero());
  }
  std::optional<int> const idx = cayley::aperiodicity_index(s);
  if (idx) {
    run.text << "aperiodic with index " << *idx << "\n";
    run.result["aperiodicity_index"] = *idx;
  } else {
    run.text << "not aperiodic\n";
    run.result["aperiodicity_index"] = nullptr;
  }
}

void cmd_green(Run& run, FiniteSemigroup const& s) {
  cayley::GreenStructure const g = cayley::green(s);
  run.text << cayley::eggbox_text(s, g);
  run.text << "principal series (minimal first):";
  for (int const cls : g.principal_series) {
    run.text << " {";
    auto const& members = g.j_classes[static_cast<std::size_t>(cls)];
    for (std::size_t i = 0; i < members.size(); ++i) {
      run.text << (i ? "," : "") << s.name_of(members[i]);
    }
    run.text << "}";
  }
  run.text << "\n";
  auto classes_json = [&s](std::vector<std::vector<element_id>> const& cc) {
    json out = json::array();
    for (auto const& c : cc) {
      out.push_back(names_json(s, c));
    }
    return out;
  };
  run.result["r_classes"] = classes_json(g.r_classes);
  run.result["l_classes"] = classes_json(g.l_classes);
  run.result["j_classes"] = classes_json(g.j_classes);
  run.result["j_regular"] = g.j_regular;
  run.result["principal_series"] = g.principal_series;
}

void cmd_rees(Run& run, FiniteSemigroup const& s, std::string const& element) {
  cayley::GreenStructure const g = cayley::green(s);
  element_id const rep = parse_element(s, element);
  int const cls = g.j_class_of[static_cast<std::size_t>(rep)];
  cayley::ReesData const rd = cayley::rees_coordinates(s, g, cls);
  run.text << "J-class of " << s.name_of(rep) << ": {";
  auto const& members = g.j_classes[static_cast<std::size_t>(cls)];
  for (std::size_t i = 0; i < members.size(); ++i) {
    run.text << (i ? "," : "") << s.name_of(members[i]);
  }
  run.text << "}\n" << cayley::structure_matrix_text(s, rd);
  if (!rd.is_null) {
    run.text << "coordinates:\n";
    for (element_id const x : members) {
      auto const& c = rd.coords[static_cast<std::size_t>(x)];
      run.text << "  " << s.name_of(x) << " -> (row " << c.first << ", col "
               << c.second << ")\n";
    }
  }
  run.result["j_class"] = names_json(s, members);
  run.result["is_null"] = rd.is_null;
  run.result["c_matrix"] = rd.c_matrix;
  json coords = json::object();
  for (element_id const x : members) {
    auto const& c = rd.coords[static_cast<std::size_t>(x)];
    coords[s.name_of(x)] = {c.first, c.second};
  }
  run.result["coords"] = coords;
}

void cmd_enumerate(Run& run, FiniteSemigroup const& s,
                   std::string const& mode, std::size_t max_elements,
                   std::size_t budget, std::string const& generators) {
  cayley::ActionPtr const act = make_action(s, mode);
  cayley::EnumOptions opts;
  opts.max_elements = max_elements;
  opts.state_budget = budget;
  if (!generators.empty()) {
    opts.generators = parse_elements(s, generators);
  }
  cayley::EnumResult const e = cayley::enumerate(act, opts);
  bool const complete = e.complete();
  run.text << "status: " << (complete ? "Complete" : "Exceeded") << "\n"
           << "elements: " << e.elements.size()
           << (complete ? "" : " found before crossing the cap") << "\n"
           << "closure depth: " << e.closure_depth << "\n";
  run.result["status"] = complete ? "Complete" : "Exceeded";
  run.result["count"] = e.elements.size();
  run.result["closure_depth"] = e.closure_depth;
  run.result["max_elements"] = e.max_elements;
  if (!complete) {
    return;
  }
  std::optional<int> const idx = cayley::cayley_aperiodicity_index(e);
  if (idx) {
    run.text << "aperiodicity index: " << *idx << "\n";
    run.result["aperiodicity_index"] = *idx;
  } else {
    run.text << "not aperiodic\n";
    run.result["aperiodicity_index"] = nullptr;
  }
  json witnesses = json::array();
  run.text << "elements by witness word (outermost first):\n";
  for (std::size_t i = 0; i < e.elements.size(); ++i) {
    run.text << "  " << i << ": " << join_names(s, e.witnesses[i]) << " ("
             << e.elements[i].num_states() << " states)\n";
    witnesses.push_back(names_json(s, e.witnesses[i]));
  }
  run.result["witnesses"] = witnesses;
  FiniteSemigroup const closure = e.to_semigroup();
  std::string const doc = cayley::emit_semigroup(closure);
  run.text << "composition semigroup:\n" << doc << "\n";
  run.result["semigroup"] = json::parse(doc);
}

void cmd_apply(Run& run, FiniteSemigroup const& s, std::string const& mode,
               std::string const& word, std::string const& input) {
  cayley::ActionPtr const act = make_action(s, mode);
  Word const f = parse_elements(s, word);
  Word const w = parse_elements(act->domain(), input);
  Word const out = cayley::apply(*act, f, w);
  run.text << join_names(act->domain(), out) << "\n";
  run.result["output"] = names_json(act->domain(), out);
}

void cmd_pascal(Run& run, FiniteSemigroup const& s, std::string const& mode,
                std::string const& word, std::string const& input) {
  cayley::ActionPtr const act = make_action(s, mode);
  Word rows = parse_elements(s, word);
  std::reverse(rows.begin(), rows.end());  // pascal_array wants them
                                           // innermost first
  Word const w = parse_elements(act->domain(), input);
  auto const table = cayley::pascal_array(*act, rows, w);
  json cells = json::array();
  for (auto const& row : table) {
    json jrow = json::array();
    for (element_id const x : row) {
      if (x == cayley::UNDEFINED) {
        run.text << "-\t";
        jrow.push_back(nullptr);
      } else {
        run.text << act->domain().name_of(x) << "\t";
        jrow.push_back(act->domain().name_of(x));
      }
    }
    run.text << "\n";
    cells.push_back(jrow);
  }
  run.result["rows"] = cells;
}

void cmd_portrait(Run& run, FiniteSemigroup const& s, std::string const& mode,
                  std::string const& word, int depth) {
  cayley::ActionPtr const act = make_action(s, mode);
  cayley::Portrait const p =
      cayley::portrait(act, parse_elements(s, word), depth);
  run.text << cayley::portrait_text(p);
  json nodes = json::array();
  for (std::size_t i = 0; i < p.address.size(); ++i) {
    json node;
    node["address"] = names_json(act->domain(), p.address[i]);
    node["outputs"] = names_json(act->domain(), p.output[i]);
    node["children"] = p.child[i];
    nodes.push_back(node);
  }
  run.result["depth"] = p.depth;
  run.result["nodes"] = nodes;
}

void cmd_dot(Run& run, FiniteSemigroup const& s, std::string const& mode,
             std::string const& word, bool as_portrait, bool base, int depth,
             std::size_t budget, std::string const& out_path) {
  cayley::ActionPtr const act = make_action(s, mode);
  std::string dot;
  if (base) {
    dot = cayley::to_dot(*act, cayley::base_machine(*act), "base");
  } else if (as_portrait) {
    dot = cayley::to_dot(
        cayley::portrait(act, parse_elements(s, word), depth));
  } else {
    dot = cayley::to_dot(
        cayley::canonicalize(act, parse_elements(s, word), budget));
  }
  if (out_path.empty()) {
    run.text << dot;
  } else {
    run.out_file = {out_path, dot};
    run.text << "wrote " << out_path << "\n";
  }
  run.result["dot"] = dot;
}

void cmd_mem(Run& run, FiniteSemigroup const& s) {
  run.text << "mem order: " << cayley::mem_order(s) << "\n";
  run.result["order"] = cayley::mem_order(s);
  std::optional<int> const idx = cayley::mem_aperiodicity_index(s);
  if (idx) {
    run.text << "mem aperiodicity index: " << *idx << "\n";
    run.result["aperiodicity_index"] = *idx;
  } else {
    run.text << "mem not aperiodic\n";
    run.result["aperiodicity_index"] = nullptr;
  }
}

void cmd_rhodes_reduce(Run& run, FiniteSemigroup const& s,
                       std::string const& word) {
  Word const w = parse_elements(s, word);
  if (w.empty()) {
    throw cayley::CayleyError("--word must be nonempty");
  }
  // The expansion element of the word: its running products, reduced.
  Word products;
  element_id acc = cayley::UNDEFINED;
  for (element_id const x : w) {
    acc = products.empty() ? x : s.product(acc, x);
    products.push_back(acc);
  }
  cayley::ChainElement const c = cayley::rhodes_reduce(s, products);
  run.text << "chain: " << join_names(s, c.entries) << "\n";
  run.result["chain"] = names_json(s, c.entries);
  run.result["chain_ids"] = c.entries;
}

void cmd_divide(Run& run, FiniteSemigroup const& s, std::string const& ideal,
                int max_len) {
  cayley::DivisionReport const r =
      cayley::division_check(s, parse_elements(s, ideal), max_len);
  run.text << (r.holds ? "division holds" : "DIVISION FAILS") << ": "
           << r.words_checked << " words, " << r.classes
           << " memory classes\n";
  run.result["holds"] = r.holds;
  run.result["words_checked"] = r.words_checked;
  run.result["classes"] = r.classes;
  if (!r.holds) {
    run.verdict_failed = true;
    run.text << "counterexample: u = " << join_names(s, r.counterexample_u)
             << ", v = " << join_names(s, r.counterexample_v) << "\n"
             << r.detail << "\n";
    run.result["counterexample_u"] = names_json(s, r.counterexample_u);
    run.result["counterexample_v"] = names_json(s, r.counterexample_v);
  }
}

cayley::TowerContext tower_context(FiniteSemigroup const& s,
                                   std::string const& ideal,
                                   std::string const& jclass, Run& run) {
  cayley::TowerContext ctx = cayley::make_tower_context(
      s, parse_elements(s, ideal), parse_element(s, jclass));
  if (ctx.added_identity) {
    run.text << "note: adjoined an identity to the input\n";
  }
  if (ctx.added_zero) {
    run.text << "note: adjoined a zero to the input (it joins the ideal)\n";
  }
  run.result["added_identity"] = ctx.added_identity;
  run.result["added_zero"] = ctx.added_zero;
  return ctx;
}

void cmd_tower_verify(Run& run, FiniteSemigroup const& s,
                      std::string const& ideal, std::string const& jclass,
                      int max_len) {
  cayley::TowerContext const ctx = tower_context(s, ideal, jclass, run);
  cayley::Verdict const v = cayley::verify_embedding(ctx, max_len);
  cayley::AdditivityReport const a = cayley::tower_additivity(ctx);
  run.text << "embedding: " << (v.ok ? "verified" : "FAILED") << "\n";
  if (!v.detail.empty()) {
    run.text << v.detail << "\n";
  }
  run.text << "aperiodicity indices: T+J " << a.index_tj << ", T "
           << a.index_t << ", trace " << a.index_tr << " -> additivity "
           << (a.holds ? "holds" : "FAILED") << "\n";
  run.result["embedding_ok"] = v.ok;
  run.result["detail"] = v.detail;
  run.result["index_tj"] = a.index_tj;
  run.result["index_t"] = a.index_t;
  run.result["index_tr"] = a.index_tr;
  run.result["additivity_holds"] = a.holds;
  if (!v.ok || !a.holds) {
    run.verdict_failed = true;
  }
}

void cmd_tower_stable(Run& run, FiniteSemigroup const& s,
                      std::string const& ideal, std::string const& jclass,
                      std::string const& word, std::string const& input) {
  cayley::TowerContext const ctx = tower_context(s, ideal, jclass, run);
  Word const f = parse_elements(ctx.s, word);
  Word const w = parse_elements(ctx.s, input);
  bool const stable = cayley::is_stable(ctx, f, w);
  int const before = cayley::j_prefix_len(ctx, w);
  int const after =
      cayley::j_prefix_len(ctx, cayley::apply(*ctx.act_tj, f, w));
  run.text << "J-prefix " << before << " -> " << after << ": "
           << (stable ? "stable" : "not stable") << "\n";
  run.result["stable"] = stable;
  run.result["j_prefix"] = before;
  run.result["j_prefix_after"] = after;
}

void cmd_verify_theorem(Run& run, int order, std::size_t cap, int word_len) {
  cayley::TheoremReport const r =
      cayley::verify_theorem(order, cap, word_len);
  run.text << cayley::theorem_report_text(r);
  json cases = json::array();
  for (cayley::TheoremCase const& c : r.cases) {
    json jc;
    jc["index"] = c.index;
    jc["aperiodic"] = c.aperiodic;
    jc["semigroup_index"] =
        c.semigroup_index ? json(*c.semigroup_index) : json(nullptr);
    jc["closure_complete"] = c.closure_complete;
    jc["closure_size"] = c.closure_size;
    jc["closure_index"] =
        c.closure_index ? json(*c.closure_index) : json(nullptr);
    jc["equivalence_ok"] = c.equivalence_ok;
    jc["subgroups_checked"] = c.subgroups_checked;
    jc["free_growth_ok"] = c.free_growth_ok;
    jc["ok"] = c.ok();
    cases.push_back(jc);
  }
  run.result["order"] = r.order;
  run.result["cap"] = r.cap;
  run.result["free_growth_word_len"] = r.free_growth_word_len;
  run.result["cases"] = cases;
  run.result["ok"] = r.ok;
  if (!r.ok) {
    run.verdict_failed = true;
  }
}

void cmd_gen_order(Run& run, int order) {
  std::vector<FiniteSemigroup> const all =
      cayley::all_semigroups_of_order(order);
  run.text << all.size() << " semigroups of order " << order
           << " up to isomorphism\n";
  json tables = json::array();
  for (FiniteSemigroup const& s : all) {
    std::ostringstream line;
    line << "[";
    for (element_id a = 0; a < s.order(); ++a) {
      line << (a ? "," : "") << "[";
      for (element_id b = 0; b < s.order(); ++b) {
        line << (b ? "," : "") << s.product(a, b);
      }
      line << "]";
    }
    line << "]";
    run.text << "  " << line.str() << "\n";
    tables.push_back(s.rows());
  }
  run.result["count"] = all.size();
  run.result["tables"] = tables;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley machines of finite semigroups"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or data")
      ->check(CLI::IsMember({"text", "data"}));

  InputSpec in_show, in_green, in_rees, in_enum, in_apply, in_pascal,
      in_portrait, in_dot, in_mem, in_rhodes, in_divide, in_tverify,
      in_tstable;
  std::string mode_enum = "full", mode_apply = "full", mode_pascal = "full",
              mode_portrait = "full", mode_dot = "full";
  std::string word_apply, input_apply, word_pascal, input_pascal;
  std::string word_portrait, word_dot, word_rhodes, word_tstable,
      input_tstable;
  std::string rees_element, enum_generators, divide_ideal, tower_ideal_v,
      tower_jclass_v, tower_ideal_s, tower_jclass_s, dot_out;
  std::size_t enum_max = 100'000;
  std::size_t enum_budget = cayley::kDefaultStateBudget;
  std::size_t dot_budget = cayley::kDefaultStateBudget;
  int portrait_depth = 2, dot_depth = 2, divide_max_len = 4,
      tower_max_len = 3, theorem_order = 0, theorem_word_len = 5,
      gen_order_n = 0;
  std::size_t theorem_cap = 100'000;
  bool dot_portrait = false, dot_base = false, mem_index = false;

  CLI::App* show = app.add_subcommand("show", "table and basic facts");
  add_input_options(show, in_show);

  CLI::App* green = app.add_subcommand("green", "Green's relations egg-box");
  add_input_options(green, in_green);

  CLI::App* rees =
      app.add_subcommand("rees", "Rees coordinates of one J-class");
  add_input_options(rees, in_rees);
  rees->add_option("--element", rees_element, "element of the J-class")
      ->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "enumerate the composition closure");
  add_input_options(enumerate, in_enum);
  enumerate->add_option("--mode", mode_enum,
                        "full | ideal=<ids> | trace=<element>");
  enumerate->add_option("--max", enum_max, "element cap");
  enumerate->add_option("--budget", enum_budget, "machine state budget");
  enumerate->add_option("--generators", enum_generators,
                        "restrict to these generators");

  CLI::App* apply =
      app.add_subcommand("apply", "apply a composition to an input word");
  add_input_options(apply, in_apply);
  apply->add_option("--mode", mode_apply, "full | ideal=<ids> | trace=<el>");
  apply->add_option("--word", word_apply, "generators, outermost first")
      ->required();
  apply->add_option("--input", input_apply, "input letters")->required();

  CLI::App* pascal =
      app.add_subcommand("pascal", "Pascal-style application array");
  add_input_options(pascal, in_pascal);
  pascal->add_option("--mode", mode_pascal, "full | ideal=<ids> | trace=<el>");
  pascal->add_option("--word", word_pascal, "generators, outermost first")
      ->required();
  pascal->add_option("--input", input_pascal, "input letters")->required();

  CLI::App* portrait =
      app.add_subcommand("portrait", "tree portrait of a composition");
  add_input_options(portrait, in_portrait);
  portrait->add_option("--mode", mode_portrait,
                       "full | ideal=<ids> | trace=<el>");
  portrait->add_option("--word", word_portrait, "generators, outermost first")
      ->required();
  portrait->add_option("--depth", portrait_depth, "portrait depth");

  CLI::App* dot = app.add_subcommand("dot", "Graphviz export");
  add_input_options(dot, in_dot);
  dot->add_option("--mode", mode_dot, "full | ideal=<ids> | trace=<el>");
  dot->add_option("--word", word_dot, "generators, outermost first");
  dot->add_flag("--portrait", dot_portrait, "export the portrait instead");
  dot->add_flag("--base", dot_base, "export the base machine of the action");
  dot->add_option("--depth", dot_depth, "portrait depth");
  dot->add_option("--state-budget", dot_budget, "machine state budget");
  dot->add_option("--out", dot_out, "write to this file instead of stdout");

  CLI::App* mem =
      app.add_subcommand("mem", "memory expansion order and aperiodicity");
  add_input_options(mem, in_mem);
  mem->add_flag("--index", mem_index, "report the aperiodicity index");

  CLI::App* rhodes = app.add_subcommand("rhodes", "Rhodes expansion");
  CLI::App* rhodes_reduce =
      rhodes->add_subcommand("reduce", "expansion element of a word");
  add_input_options(rhodes_reduce, in_rhodes);
  rhodes_reduce
      ->add_option("--word", word_rhodes, "generators, first factor first")
      ->required();
  rhodes->require_subcommand(1);

  CLI::App* divide =
      app.add_subcommand("divide", "memory-division check over an ideal");
  add_input_options(divide, in_divide);
  divide->add_option("--ideal", divide_ideal, "ideal elements")->required();
  divide->add_option("--max-len", divide_max_len, "generator word length");

  CLI::App* tower = app.add_subcommand("tower", "ideal-tower layer analysis");
  CLI::App* tower_verify = tower->add_subcommand(
      "verify", "layer embedding and index additivity");
  add_input_options(tower_verify, in_tverify);
  tower_verify->add_option("--ideal", tower_ideal_v, "ideal T (input ids)")
      ->required();
  tower_verify
      ->add_option("--jclass", tower_jclass_v, "element of the J-class above")
      ->required();
  tower_verify->add_option("--max-len", tower_max_len,
                           "generator word length");
  CLI::App* tower_stable =
      tower->add_subcommand("stable", "stability of one input word");
  add_input_options(tower_stable, in_tstable);
  tower_stable->add_option("--ideal", tower_ideal_s, "ideal T (input ids)")
      ->required();
  tower_stable
      ->add_option("--jclass", tower_jclass_s, "element of the J-class above")
      ->required();
  tower_stable
      ->add_option("--word", word_tstable, "generators, outermost first")
      ->required();
  tower_stable->add_option("--input", input_tstable, "input letters")
      ->required();
  tower->require_subcommand(1);

  CLI::App* verify_theorem = app.add_subcommand(
      "verify-theorem", "three-way equivalence over all semigroups of an "
                        "order");
  verify_theorem->add_option("--order", theorem_order, "semigroup order")
      ->required();
  verify_theorem->add_option("--max", theorem_cap, "closure element cap");
  verify_theorem->add_option("--word-len", theorem_word_len,
                             "free-growth word length");

  CLI::App* gen_order = app.add_subcommand(
      "gen-order", "all semigroups of an order up to isomorphism");
  gen_order->add_option("--order", gen_order_n, "semigroup order")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  Run run;
  auto const t0 = std::chrono::steady_clock::now();
  try {
    if (show->parsed()) {
      run.command = "show";
      cmd_show(run, in_show.resolve());
    } else if (green->parsed()) {
      run.command = "green";
      cmd_green(run, in_green.resolve());
    } else if (rees->parsed()) {
      run.command = "rees";
      cmd_rees(run, in_rees.resolve(), rees_element);
    } else if (enumerate->parsed()) {
      run.command = "enumerate";
      cmd_enumerate(run, in_enum.resolve(), mode_enum, enum_max, enum_budget,
                    enum_generators);
    } else if (apply->parsed()) {
      run.command = "apply";
      cmd_apply(run, in_apply.resolve(), mode_apply, word_apply, input_apply);
    } else if (pascal->parsed()) {
      run.command = "pascal";
      cmd_pascal(run, in_pascal.resolve(), mode_pascal, word_pascal,
                 input_pascal);
    } else if (portrait->parsed()) {
      run.command = "portrait";
      cmd_portrait(run, in_portrait.resolve(), mode_portrait, word_portrait,
                   portrait_depth);
    } else if (dot->parsed()) {
      run.command = "dot";
      cmd_dot(run, in_dot.resolve(), mode_dot, word_dot, dot_portrait,
              dot_base, dot_depth, dot_budget, dot_out);
    } else if (mem->parsed()) {
      run.command = "mem";
      (void)mem_index;  // both facts are cheap, so always report them
      cmd_mem(run, in_mem.resolve());
    } else if (rhodes->parsed()) {
      run.command = "rhodes reduce";
      cmd_rhodes_reduce(run, in_rhodes.resolve(), word_rhodes);
    } else if (divide->parsed()) {
      run.command = "divide";
      cmd_divide(run, in_divide.resolve(), divide_ideal, divide_max_len);
    } else if (tower->parsed()) {
      if (tower_verify->parsed()) {
        run.command = "tower verify";
        cmd_tower_verify(run, in_tverify.resolve(), tower_ideal_v,
                         tower_jclass_v, tower_max_len);
      } else {
        run.command = "tower stable";
        cmd_tower_stable(run, in_tstable.resolve(), tower_ideal_s,
                         tower_jclass_s, word_tstable, input_tstable);
      }
    } else if (verify_theorem->parsed()) {
      run.command = "verify-theorem";
      cmd_verify_theorem(run, theorem_order, theorem_cap, theorem_word_len);
    } else if (gen_order->parsed()) {
      run.command = "gen-order";
      cmd_gen_order(run, gen_order_n);
    }
  } catch (cayley::CayleyError const& e) {
    if (format == "data") {
      json doc;
      doc["command"] = run.command;
      doc["status"] = "error";
      doc["error"] = e.what();
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kExitUsage;
  }
  auto const t1 = std::chrono::steady_clock::now();
  double const ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  if (run.out_file) {
    std::ofstream out(run.out_file->first);
    if (!out) {
      std::cerr << "error: cannot write " << run.out_file->first << "\n";
      return kExitUsage;
    }
    out << run.out_file->second;
  }
  if (format == "data") {
    json doc;
    doc["command"] = run.command;
    doc["status"] = run.verdict_failed ? "verdict-failed" : "ok";
    doc["result"] = run.result;
    doc["timing_ms"] = ms;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << run.text.str();
    std::cerr << "time: " << ms << " ms\n";
  }
  return run.verdict_failed ? kExitVerdict : kExitOk;
}
