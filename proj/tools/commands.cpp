#include "commands.hpp"

#include "nilbound/bounds.hpp"
#include "nilbound/constructions.hpp"
#include "nilbound/errors.hpp"
#include "nilbound/group_json.hpp"
#include "nilbound/perm_group.hpp"
#include "nilbound/search.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace nilbound::cli {
namespace {

using nlohmann::json;

struct Settings {
  bool json_output = false;
  std::string input = "-";

  unsigned p = 0, k = 0, c = 0;
  unsigned c_max = 8;
  std::size_t budget = kDefaultSearchBudget;
  unsigned threads = 1;

  bool table1 = false, table2 = false;
  std::optional<unsigned> k_max;
};

json read_json(const std::string &path, std::istream &in) {
  if (path == "-")
    return json::parse(in);
  std::ifstream file(path);
  if (!file)
    throw std::invalid_argument("cannot open " + path);
  return json::parse(file);
}

void emit(std::ostream &out, const json &j) { out << j.dump(2) << '\n'; }

std::string composition_string(const Composition &a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    s += (i ? "," : "") + std::to_string(a.parts[i]);
  return s + ")";
}

std::string rational_string(const Rational &q) {
  std::ostringstream s;
  s << numerator(q);
  if (denominator(q) != 1)
    s << '/' << denominator(q);
  return s.str();
}

template <class T> std::string or_dash(const std::optional<T> &v) {
  return v ? std::to_string(*v) : std::string("-");
}

void print_prediction(std::ostream &out, const Prediction &pred) {
  out << "degree       " << pred.degree << '\n'
      << "order        " << pred.order << '\n'
      << "p            " << or_dash(pred.p) << '\n'
      << "log_p order  " << or_dash(pred.log_p_order) << '\n'
      << "class        " << (pred.class_bound ? std::to_string(*pred.class_bound) : "not nilpotent")
      << '\n';
}

int cmd_bound(const Settings &s, std::ostream &out) {
  const BoundReport r = bound_report(s.p, s.k, s.c);
  if (s.json_output) {
    emit(out, to_json(r));
    return kOk;
  }
  out << "p = " << r.p << ", k = " << r.k << ", c = " << r.c << '\n'
      << "f_upper                 " << r.f_upper << '\n'
      << "witness composition     " << composition_string(r.witness) << '\n'
      << "elementary bound        " << r.elementary << '\n'
      << "class-2 exact           " << or_dash(r.class2_exact) << '\n'
      << "binomial lower bound    " << or_dash(r.binomial_lower) << '\n'
      << "asymptotic coefficient  " << rational_string(r.asymptotic_coefficient) << '\n';
  return kOk;
}

int cmd_construct(const Settings &s, std::istream &in, std::ostream &out, std::ostream &err) {
  const GroupBlueprint bp = blueprint_from_json(read_json(s.input, in));
  const Realization r = realize(bp);
  if (!r.group) {
    err << "construction refused by the degree guard; prediction only\n";
    if (s.json_output)
      emit(out, {{"blueprint", to_json(bp)}, {"prediction", to_json(r.prediction)}});
    else
      print_prediction(out, r.prediction);
    return kGuard;
  }
  verify_prediction(r.prediction, *r.group);
  if (s.json_output) {
    emit(out, {{"blueprint", to_json(bp)},
               {"group", group_to_json(*r.group)},
               {"prediction", to_json(r.prediction)}});
  } else {
    out << kind_name(bp.kind) << " (verified)\n";
    print_prediction(out, r.prediction);
    out << "generators   " << r.group->generators().size() << '\n';
  }
  return kOk;
}

int cmd_analyze(const Settings &s, std::istream &in, std::ostream &out) {
  json doc = read_json(s.input, in);
  // Accept construct output directly.
  if (doc.is_object() && doc.contains("group"))
    doc = doc["group"];
  const PermGroup g = group_from_json(doc);

  const CentralSeries series = lower_central_series(g);
  std::optional<BigInt> center_order;
  try {
    center_order = center(g).order();
  } catch (const GuardExceeded &) {
  }
  const Prediction pred = describe(g);
  const bool transitive = is_transitive(g);
  const bool regular = is_regular(g);
  const bool abelian = is_abelian(g);
  const std::size_t orbit_count = orbits(g).size();

  if (s.json_output) {
    json lcs = json::array();
    for (const PermGroup &t : series.terms)
      lcs.push_back(t.order().str());
    emit(out, {{"degree", g.degree()},
               {"order", g.order().str()},
               {"orbits", orbit_count},
               {"transitive", transitive},
               {"regular", regular},
               {"abelian", abelian},
               {"nilpotency_class", series.nilpotency_class ? json(*series.nilpotency_class)
                                                            : json("not nilpotent")},
               {"center_order", center_order ? json(center_order->str()) : json()},
               {"lower_central_series", std::move(lcs)},
               {"prediction", to_json(pred)}});
    return kOk;
  }
  out << "degree       " << g.degree() << '\n'
      << "order        " << g.order() << '\n'
      << "orbits       " << orbit_count << '\n'
      << "transitive   " << (transitive ? "yes" : "no") << '\n'
      << "regular      " << (regular ? "yes" : "no") << '\n'
      << "abelian      " << (abelian ? "yes" : "no") << '\n'
      << "class        "
      << (series.nilpotency_class ? std::to_string(*series.nilpotency_class) : "not nilpotent")
      << '\n'
      << "center order " << (center_order ? center_order->str() : "(beyond scan guard)") << '\n'
      << "lower central series orders:";
  for (const PermGroup &t : series.terms)
    out << ' ' << t.order();
  out << '\n';
  return kOk;
}

ExactSearchOptions search_options(const Settings &s) {
  ExactSearchOptions o;
  o.subgroups.max_count = s.budget;
  o.subgroups.threads = s.threads;
  return o;
}

int cmd_search(const Settings &s, std::ostream &out, std::ostream &err) {
  const SearchRow row = fnil_exact(s.p, s.k, s.c_max, search_options(s));
  const AuditReport audit = audit_row(row);
  if (!audit.passed()) {
    err << "invariant violation\n" << audit.failures();
    return kInvariant;
  }
  if (s.json_output) {
    emit(out, to_json(row));
    return kOk;
  }
  out << "p = " << row.p << ", k = " << row.k << ", classes 1.." << row.c_max << '\n'
      << "exponents ";
  for (unsigned e : row.exponents)
    out << ' ' << e;
  out << "\nsubgroups examined " << row.subgroups_examined << '\n';
  return kOk;
}

int table1(const Settings &s, std::ostream &out) {
  const unsigned k_max = s.k_max.value_or(12);
  if (k_max == 0)
    throw std::invalid_argument("--kmax must be positive");
  json rows = json::array();
  bool all_agree = true;
  if (!s.json_output)
    out << " c |   k |     F(k,c) |     closed | maximizer\n"
        << "---+-----+------------+------------+----------\n";
  for (unsigned c = 1; c <= 4; ++c)
    for (unsigned k = 1; k <= k_max; ++k) {
      const CompositionMax m = f_upper(k, c);
      const Exponent closed = f_closed(k, c);
      all_agree = all_agree && closed == m.value;
      if (s.json_output) {
        rows.push_back({{"c", c},
                        {"k", k},
                        {"f_upper", m.value},
                        {"f_closed", closed},
                        {"witness", m.witness.parts}});
      } else {
        out << std::setw(2) << c << " | " << std::setw(3) << k << " | " << std::setw(10) << m.value
            << " | " << std::setw(10) << closed << " | " << composition_string(m.witness)
            << (closed == m.value ? "" : "  MISMATCH") << '\n';
      }
    }
  if (s.json_output)
    emit(out, {{"table", "F(k,c)"}, {"rows", std::move(rows)}});
  if (!all_agree)
    throw InvariantViolation("closed form disagrees with the composition maximum");
  return kOk;
}

int table2(const Settings &s, std::ostream &out) {
  constexpr unsigned kColumns = 16;
  const unsigned exact_up_to = s.k_max.value_or(3);
  json rows = json::array();
  if (!s.json_output) {
    out << "log_2 of the largest transitive nilpotent group of degree 2^k and class <= c\n"
        << " k |";
    for (unsigned c = 1; c <= kColumns; ++c)
      out << std::setw(3) << c;
    out << " | source\n---+" << std::string(3 * kColumns, '-') << "-+-------\n";
  }
  for (unsigned k = 1; k <= 5; ++k) {
    std::vector<unsigned> exponents;
    std::string source;
    if (k <= exact_up_to) {
      exponents = fnil_exact(2, k, kColumns, search_options(s)).exponents;
      source = exponents == reference_table2_row(k) ? "exact" : "exact (differs from reference)";
    } else {
      exponents = reference_table2_row(k);
      source = "reference (not recomputed)";
    }
    if (s.json_output) {
      rows.push_back({{"k", k}, {"exponents", exponents}, {"source", source}});
    } else {
      out << std::setw(2) << k << " |";
      for (unsigned e : exponents)
        out << std::setw(3) << e;
      out << " | " << source << '\n';
    }
  }
  if (s.json_output)
    emit(out, {{"table", "log2 F_Nil(2^k,c)"}, {"rows", std::move(rows)}});
  return kOk;
}

int cmd_table(const Settings &s, std::ostream &out) {
  if (s.table1 == s.table2)
    throw CLI::ValidationError("table", "choose exactly one of --table1 and --table2");
  return s.table1 ? table1(s, out) : table2(s, out);
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  Settings s;
  CLI::App app{"Bounds, constructions and exhaustive searches for transitive nilpotent "
               "permutation groups"};
  app.name("nilbound");
  app.require_subcommand(1);
  app.add_flag("--json", s.json_output, "Emit JSON instead of text");

  auto json_flag = [&](CLI::App *sub) { sub->add_flag("--json", s.json_output, "Emit JSON"); };
  auto positive = CLI::PositiveNumber;

  CLI::App *bound = app.add_subcommand("bound", "Every bound exponent for one (p, k, c)");
  bound->add_option("--p", s.p, "Prime")->required()->check(positive);
  bound->add_option("--k", s.k, "Degree exponent: degree p^k")->required()->check(positive);
  bound->add_option("--c", s.c, "Nilpotency class")->required()->check(positive);
  json_flag(bound);

  CLI::App *construct =
      app.add_subcommand("construct", "Build and verify a group from a blueprint JSON file");
  construct->add_option("input", s.input, "Blueprint file, or - for stdin");
  json_flag(construct);

  CLI::App *analyze = app.add_subcommand("analyze", "Analyze a group given as JSON");
  analyze->add_option("input", s.input, "Group file, or - for stdin");
  json_flag(analyze);

  CLI::App *search =
      app.add_subcommand("search", "Exhaustive search over subgroups of the Sylow subgroup");
  search->add_option("--p", s.p, "Prime")->required()->check(positive);
  search->add_option("--k", s.k, "Degree exponent: degree p^k")->required()->check(positive);
  search->add_option("--cmax", s.c_max, "Largest class reported")->check(positive);
  search->add_option("--budget", s.budget, "Maximum number of subgroups visited")
      ->envname("NILBOUND_BUDGET")
      ->check(positive);
  search->add_option("--threads", s.threads, "Worker threads")->check(positive);
  json_flag(search);

  CLI::App *table = app.add_subcommand("table", "Print a reference table");
  table->add_flag("--table1", s.table1, "F(k,c) for c <= 4");
  table->add_flag("--table2", s.table2, "Exponents of the largest groups of degree 2^k");
  table->add_option("--kmax", s.k_max,
                    "Largest k: table rows (--table1, default 12) or largest searched row "
                    "(--table2, default 3)");
  table->add_option("--budget", s.budget, "Maximum subgroups per search")
      ->envname("NILBOUND_BUDGET")
      ->check(positive);
  json_flag(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (bound->parsed()) {
      if (!is_prime(s.p))
        throw std::invalid_argument("p must be prime");
      return cmd_bound(s, out);
    }
    if (construct->parsed())
      return cmd_construct(s, in, out, err);
    if (analyze->parsed())
      return cmd_analyze(s, in, out);
    if (search->parsed())
      return cmd_search(s, out, err);
    return cmd_table(s, out);
  } catch (const GuardExceeded &e) {
    err << "refused: " << e.what() << '\n';
    return kGuard;
  } catch (const std::overflow_error &e) {
    err << "refused: " << e.what() << '\n';
    return kGuard;
  } catch (const InvariantViolation &e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const json::exception &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error &e) {
    // invalid_argument, out_of_range, domain_error and ParseError
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace nilbound::cli
