// canon: command-line driver for the model-construction pipeline.
//
// Exit codes: 0 pass, 1 logical failure (the report says why), 2 usage or
// input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "canon/backforth/backforth.hpp"
#include "canon/category/naturality.hpp"
#include "canon/compactness/satisfiability.hpp"
#include "canon/henkin/term_model.hpp"
#include "canon/syntax/parser.hpp"
#include "canon/syntax/print.hpp"
#include "report.hpp"

namespace {

using namespace canon;
using report::Json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Logical failure with a report body: exit 1.
struct Failure : std::runtime_error {
  Failure(std::string kind, const std::string& message, Json details = Json::object())
      : std::runtime_error(message), kind(std::move(kind)), details(std::move(details)) {}
  std::string kind;
  Json details;
};

struct Options {
  std::vector<std::string> theories;
  std::string left, right;
  std::vector<std::string> translations;
  std::string sentence;
  std::size_t horizon = 30;
  std::size_t depth = 3;
  std::size_t closure_depth = 3;
  std::size_t eval_range = 64;
  std::size_t rounds = 20;
  std::size_t window = 2;
  std::size_t samples = 0;
  std::optional<std::size_t> max_steps, max_term_depth, max_model_size;
  std::string plugin;
  std::string format = "json";
  std::string output;
  std::string dot;
  std::string left_model = "plugin", right_model = "plugin";
  bool against_parent = false;
  bool corrupt_gf = false;
  bool seed_eta = false;

  proof::Budget budget() const {
    proof::Budget b;
    if (const char* env = std::getenv("CANON_BUDGET")) {
      try {
        b = proof::parse_budget(env);
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("CANON_BUDGET: ") + e.what());
      }
    }
    if (max_steps) b.max_steps = *max_steps;
    if (max_term_depth) b.max_term_depth = *max_term_depth;
    if (max_model_size) b.max_model_size = *max_model_size;
    try {
      b.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return b;
  }

  category::BundleParams bundle() const {
    category::BundleParams p;
    p.horizon = horizon;
    p.depth = depth;
    p.closure_depth = closure_depth;
    p.budget = budget();
    p.plugin = plugin;
    p.window = window;
    return p;
  }
};

syntax::Theory load_theory(const std::string& path) {
  try {
    return syntax::load_theory(path);
  } catch (const syntax::TheoryFileError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

category::Translation load_translation(const std::string& path, const syntax::Signature& from,
                                       const syntax::Signature& to) {
  try {
    return category::load_translation(path, from, to);
  } catch (const category::TranslationFileError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

const std::string& single_theory(const Options& o) {
  if (o.theories.size() != 1) throw InputError("exactly one --theory is required");
  return o.theories.front();
}

std::string plugin_of(const Options& o, const syntax::Theory& t) { return category::resolve_plugin(t, o.plugin); }

henkin::CompleteFront front_of(const Options& o, const syntax::Theory& t) {
  return henkin::lindenbaum_extend(t, o.horizon, o.budget(), compactness::oracle_for(plugin_of(o, t)), o.window);
}

struct Result {
  Json body;
  bool pass;
};

Result cmd_parse(const Options& o, report::Header& h) {
  auto t = load_theory(single_theory(o));
  h.plugin = t.plugin;
  return {report::theory(t), true};
}

Result cmd_decide(const Options& o, report::Header& h) {
  auto t = load_theory(single_theory(o));
  if (o.sentence.empty()) throw InputError("--sentence is required");
  h.plugin = plugin_of(o, t);
  syntax::ParseOptions opts;
  opts.allow_free_variables = false;
  std::optional<syntax::Formula> s;
  try {
    s = syntax::parse_formula(o.sentence, t.signature, opts);
  } catch (const syntax::ParseError& e) {
    throw InputError(std::string("--sentence: ") + e.what());
  }
  auto oracle = compactness::oracle_for(h.plugin);
  auto d = proof::decide(t.axioms, *s, h.budget, *oracle, t.signature);
  auto v = proof::prove(t.axioms, *s, h.budget, t.signature);
  Json body{{"sentence", syntax::print(*s)},
            {"oracle", oracle->id()},
            {"decision", proof::to_string(d)},
            {"prove", proof::to_string(v.kind)},
            {"prove_steps", v.steps}};
  return {body, d != proof::Decision::Unknown};
}

Result cmd_lindenbaum(const Options& o, report::Header& h) {
  auto t = load_theory(single_theory(o));
  h.plugin = plugin_of(o, t);
  auto front = front_of(o, t);
  auto problems = front.validate();
  return {Json{{"front", report::front(front)}, {"validation", problems}}, problems.empty()};
}

Result cmd_term_model(const Options& o, report::Header& h) {
  auto t = load_theory(single_theory(o));
  h.plugin = plugin_of(o, t);
  auto tm = henkin::build_term_model(front_of(o, t), o.depth);
  auto truth = henkin::check_truth_lemma(tm, o.horizon);
  auto witnesses = henkin::check_witnesses(tm);
  bool pass = truth.pass() && witnesses.pass() && tm.congruence_violations().empty();
  return {Json{{"term_model", report::term_model(tm)},
               {"truth_lemma", report::truth_lemma(truth)},
               {"witnesses", report::truth_lemma(witnesses)}},
          pass};
}

Result cmd_canonical_model(const Options& o, report::Header& h) {
  auto t = load_theory(single_theory(o));
  h.plugin = plugin_of(o, t);
  auto tm = henkin::build_term_model(front_of(o, t), o.depth);
  auto model = compactness::canonical_model(h.plugin, tm.front());
  auto check = compactness::check_sentences(*model, tm.front().accumulated(), o.eval_range);
  return {Json{{"model", report::computable_model(*model)}, {"front_check", report::model_check(check)}}, check.pass()};
}

Result cmd_skolem_closure(const Options& o, report::Header& h) {
  auto t = load_theory(single_theory(o));
  auto b = category::build_bundle(t, o.bundle());
  h.plugin = b.plugin;
  std::vector<std::string> provenance_errors;
  for (auto e : b.closure->members())
    if (proof::evaluate(b.closure->parent(), b.closure->provenance(e)) != e)
      provenance_errors.push_back(b.closure->describe(e));
  return {Json{{"closure", report::closure(*b.closure)}, {"provenance_errors", provenance_errors}},
          provenance_errors.empty()};
}

Result cmd_satreport(const Options& o, report::Header& h) {
  auto t = load_theory(single_theory(o));
  h.plugin = t.plugin;
  auto r = compactness::check_finite_satisfiability(t, o.horizon, h.budget);
  bool complete = true;
  for (const auto& x : r.results) complete = complete && x.status != compactness::SubsetResult::Status::BudgetSpent;
  return {Json{{"satisfiability", report::sat_report(r)}, {"complete", complete}}, complete};
}

Json inverse_check(const category::EtaComponent& eta, const std::vector<proof::Element>& domain) {
  try {
    auto inv = category::invert_component(eta.map, domain);
    return Json{{"ok", true}, {"size", inv.assignment().size()}};
  } catch (const category::NotBijective& e) {
    return Json{{"ok", false},
                {"kind", e.kind() == category::NotBijective::Kind::Missed ? "missed" : "doubly-hit"},
                {"witness", eta.map.target().describe(e.witness())},
                {"message", e.what()}};
  }
}

Result cmd_eta(const Options& o, report::Header& h) {
  auto t = load_theory(single_theory(o));
  auto b = category::build_bundle(t, o.bundle());
  h.plugin = b.plugin;
  auto eta = o.against_parent ? category::eta_against_parent(b.term, b.parent, o.eval_range) : b.eta;
  std::vector<proof::Element> domain;
  if (o.against_parent)
    domain = b.parent->elements(b.parent->finite_size() ? *b.parent->finite_size() : o.eval_range);
  else
    domain = b.closure->members();
  auto elementary = backforth::check_elementary(eta.map, backforth::formula_battery(t.signature), o.eval_range);
  auto inverse = inverse_check(eta, domain);
  Json body{{"target", o.against_parent ? "parent" : "closure"},
            {"eta", report::eta(eta)},
            {"elementary", report::elementary(elementary, false)},
            {"inverse", inverse}};
  return {body, eta.bijective() && elementary.pass() && inverse["ok"].get<bool>()};
}

Result cmd_naturality(const Options& o, report::Header& h) {
  if (o.left.empty() || o.right.empty()) throw InputError("--left and --right are required");
  auto t1 = load_theory(o.left), t2 = load_theory(o.right);
  std::optional<category::Translation> f;
  if (o.translations.size() > 1) throw InputError("at most one --translation");
  if (o.translations.empty()) {
    if (!(t1.signature == t2.signature)) throw InputError("without --translation the signatures must agree");
    f = category::identity(t1.signature);
  } else {
    f = load_translation(o.translations.front(), t1.signature, t2.signature);
  }
  auto params = o.bundle();
  auto b1 = category::build_bundle(t1, params);
  auto b2 = category::build_target_bundle(*f, b1, t2, params);
  h.plugin = b1.plugin + " -> " + b2.plugin;
  auto check = category::check_translation(*f, t1, t2, category::default_samples(t1, o.samples), h.budget);
  auto F = category::F_on_morphism(*f, b1.term, b2.term);
  auto G = category::G_on_morphism(*f, b1.closure, b2.closure);
  if (o.corrupt_gf) G = category::swap_first_images(G);
  auto square = category::check_naturality(f->name(), F, G, b1.eta.map, b2.eta.map);
  if (!o.dot.empty()) {
    std::ofstream out(o.dot);
    if (!out) throw InputError("cannot write " + o.dot);
    out << category::to_dot(square);
  }
  Json body{{"translation", report::translation(*f)},
            {"corrupted_G", o.corrupt_gf},
            {"translation_check", report::translation_report(check)},
            {"naturality", report::naturality(square)}};
  return {body, check.pass() && square.pass()};
}

std::shared_ptr<const proof::Structure> pick(const category::Bundle& b, const std::string& which) {
  if (which == "term") return b.term;
  if (which == "closure") return b.closure;
  return b.parent;
}

Result cmd_back_forth(const Options& o, report::Header& h) {
  std::string left = !o.left.empty() ? o.left : (o.theories.empty() ? "" : o.theories.front());
  if (left.empty()) throw InputError("--left (or --theory) is required");
  std::string right = o.right.empty() ? left : o.right;
  auto params = o.bundle();
  auto bl = category::build_bundle(load_theory(left), params);
  auto br = right == left ? bl : category::build_bundle(load_theory(right), params);
  h.plugin = bl.plugin + " <-> " + br.plugin;
  backforth::PartialIso iso(pick(bl, o.left_model), pick(br, o.right_model));
  if (o.seed_eta) {
    if (o.left_model != "term" || o.right_model != "closure" || right != left)
      throw InputError("--seed-eta needs --left-model term --right-model closure on one theory");
    for (const auto& [l, r] : bl.eta.map.assignment()) iso.seed(l, r);
  }
  try {
    iso = backforth::run_back_and_forth(iso, o.rounds);
  } catch (const backforth::TypeUnrealizable& e) {
    Json d = Json::object();
    if (e.round()) d["round"] = *e.round();
    throw Failure("TypeUnrealizable", e.what(), d);
  }
  // Coverage: the first floor(R/2) enumerated elements of each side.
  std::vector<std::string> uncovered;
  auto check_side = [&](const proof::Structure& m, bool left_side) {
    std::size_t n = o.rounds / 2;
    if (m.finite_size()) n = std::min(n, *m.finite_size());
    for (auto e : m.elements(n))
      if (!(left_side ? iso.image(e) : iso.preimage(e)))
        uncovered.push_back(std::string(left_side ? "left " : "right ") + m.describe(e));
  };
  check_side(iso.left(), true);
  check_side(iso.right(), false);
  auto body = report::partial_iso(iso);
  body["uncovered"] = uncovered;
  return {body, iso.violations().empty() && uncovered.empty()};
}

Result cmd_functor_laws(const Options& o, report::Header& h) {
  if (o.theories.size() < 2) throw InputError("functor-laws needs at least two --theory files");
  if (o.translations.size() + 1 != o.theories.size())
    throw InputError("functor-laws needs one --translation between each consecutive pair of theories");
  std::vector<syntax::Theory> ts;
  for (const auto& p : o.theories) ts.push_back(load_theory(p));
  std::vector<category::Translation> steps;
  for (std::size_t i = 0; i < o.translations.size(); ++i)
    steps.push_back(load_translation(o.translations[i], ts[i].signature, ts[i + 1].signature));
  auto params = o.bundle();
  std::vector<category::Bundle> chain{category::build_bundle(ts[0], params)};
  for (std::size_t i = 0; i < steps.size(); ++i)
    chain.push_back(category::build_target_bundle(steps[i], chain.back(), ts[i + 1], params));
  h.plugin = chain.front().plugin;
  auto laws = category::check_functor_laws(chain, steps);
  Json translations = Json::array();
  for (const auto& s : steps) translations.push_back(report::translation(s));
  return {Json{{"translations", translations}, {"laws", report::functor_laws(laws)}}, laws.pass()};
}

void emit(const Options& o, const Json& j) {
  std::string text = o.format == "text" ? report::render_text(j) : j.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw InputError("cannot write " + o.output);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order model constructions: Henkin term models, canonical models, eta and naturality."};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    Result (*run)(const Options&, report::Header&);
  };
  const std::vector<Command> commands = {
      {"parse", "Echo a theory in canonical form", cmd_parse},
      {"decide", "Decide a sentence against a theory", cmd_decide},
      {"lindenbaum", "Build the complete front of a theory", cmd_lindenbaum},
      {"term-model", "Build the Henkin term model F(t)", cmd_term_model},
      {"canonical-model", "Interpret the front in the plugin model", cmd_canonical_model},
      {"skolem-closure", "Build G(t), the closure of the Henkin constants", cmd_skolem_closure},
      {"satreport", "Finite satisfiability of subsets of the axioms", cmd_satreport},
      {"eta", "The component eta_t: F(t) -> G(t)", cmd_eta},
      {"naturality", "Check the naturality square of a translation", cmd_naturality},
      {"back-forth", "Back-and-forth between two models", cmd_back_forth},
      {"functor-laws", "Identity and composition laws along a chain of translations", cmd_functor_laws},
  };

  std::string chosen;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->callback([&chosen, name = c.name] { chosen = name; });
    sub->add_option("--theory", o.theories, "Theory file (repeat for functor-laws)");
    sub->add_option("--left", o.left, "Source theory file");
    sub->add_option("--right", o.right, "Target theory file");
    sub->add_option("--translation", o.translations, "Translation file (repeat for functor-laws)");
    sub->add_option("--sentence", o.sentence, "Sentence for decide");
    sub->add_option("--horizon,-N", o.horizon, "Lindenbaum horizon N")->check(CLI::PositiveNumber);
    sub->add_option("--depth,-d", o.depth, "Term-model depth d")->check(CLI::PositiveNumber);
    sub->add_option("--closure-depth", o.closure_depth, "Skolem-closure depth");
    sub->add_option("--eval-range,-E", o.eval_range, "Quantifier range on infinite models")->check(CLI::PositiveNumber);
    sub->add_option("--rounds,-R", o.rounds, "Back-and-forth rounds");
    sub->add_option("--window", o.window, "Henkin window per existential");
    sub->add_option("--samples", o.samples, "Enumerated sentences added to the translation samples");
    sub->add_option("--max-steps", o.max_steps, "Budget: prover steps")->check(CLI::PositiveNumber);
    sub->add_option("--max-term-depth", o.max_term_depth, "Budget: term depth")->check(CLI::PositiveNumber);
    sub->add_option("--max-model-size", o.max_model_size, "Budget: finite model size")->check(CLI::PositiveNumber);
    sub->add_option("--plugin", o.plugin, "Canonical-model plugin")->check(CLI::IsMember(compactness::plugin_ids()));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output,-o", o.output, "Write the report to a file");
    sub->add_option("--dot", o.dot, "naturality: write the square as Graphviz");
    sub->add_option("--left-model", o.left_model, "back-forth: term, closure or plugin")
        ->check(CLI::IsMember({"term", "closure", "plugin"}));
    sub->add_option("--right-model", o.right_model, "back-forth: term, closure or plugin")
        ->check(CLI::IsMember({"term", "closure", "plugin"}));
    sub->add_flag("--seed-eta", o.seed_eta, "back-forth: start from eta (term -> closure)");
    sub->add_flag("--against-parent", o.against_parent, "eta: compare against the whole plugin model");
    sub->add_flag("--corrupt-gf", o.corrupt_gf, "naturality: swap two images of G(f)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  report::Header h;
  h.command = chosen;
  for (std::size_t i = 0; i < o.theories.size(); ++i)
    h.inputs[o.theories.size() == 1 ? "theory" : "theory" + std::to_string(i)] = o.theories[i];
  if (!o.left.empty()) h.inputs["left"] = o.left;
  if (!o.right.empty()) h.inputs["right"] = o.right;
  for (std::size_t i = 0; i < o.translations.size(); ++i)
    h.inputs[o.translations.size() == 1 ? "translation" : "translation" + std::to_string(i)] = o.translations[i];
  if (!o.sentence.empty()) h.inputs["sentence"] = o.sentence;
  h.horizon = o.horizon;
  h.depth = o.depth;
  h.closure_depth = o.closure_depth;
  h.eval_range = o.eval_range;
  h.rounds = o.rounds;

  auto fail_report = [&](const std::string& kind, const std::string& message, Json details) {
    Json j = report::header(h);
    Json err{{"kind", kind}, {"message", message}};
    for (const auto& [k, v] : details.items()) err[k] = v;
    j["error"] = err;
    j["pass"] = false;
    emit(o, j);
    return 1;
  };

  try {
    h.budget = o.budget();
    const auto& cmd = *std::find_if(commands.begin(), commands.end(), [&](const Command& c) { return chosen == c.name; });
    auto result = cmd.run(o, h);
    Json j = report::header(h);
    j["result"] = result.body;
    j["pass"] = result.pass;
    emit(o, j);
    return result.pass ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "canon: " << e.what() << "\n";
    return 2;
  } catch (const syntax::SignatureError& e) {
    std::cerr << "canon: " << e.what() << "\n";
    return 2;
  } catch (const category::SignatureMismatch& e) {
    std::cerr << "canon: " << e.what() << "\n";
    return 2;
  } catch (const category::TranslationError& e) {
    std::cerr << "canon: " << e.what() << "\n";
    return 2;
  } catch (const Failure& e) {
    return fail_report(e.kind, e.what(), e.details);
  } catch (const henkin::StageUndecidable& e) {
    return fail_report("StageUndecidable", e.what(), Json{{"stage", e.stage()}, {"sentence", e.sentence()}});
  } catch (const henkin::InconsistentInput& e) {
    return fail_report("InconsistentInput", e.what(), Json::object());
  } catch (const compactness::UnsupportedTheory& e) {
    return fail_report("UnsupportedTheory", e.what(), Json::object());
  } catch (const compactness::WitnessUnassignable& e) {
    return fail_report("WitnessUnassignable", e.what(), Json::object());
  } catch (const category::TranslationUnsound& e) {
    return fail_report("TranslationUnsound", e.what(), Json::object());
  } catch (const category::EvaluationOutOfRange& e) {
    return fail_report("EvaluationOutOfRange", e.what(), Json::object());
  } catch (const backforth::TypeUnrealizable& e) {
    Json d = Json::object();
    if (e.round()) d["round"] = *e.round();
    return fail_report("TypeUnrealizable", e.what(), d);
  } catch (const henkin::HenkinError& e) {
    return fail_report("HenkinError", e.what(), Json::object());
  } catch (const std::exception& e) {
    std::cerr << "canon: " << e.what() << "\n";
    return 2;
  }
}
