#include "sgp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "sgp/bounds.hpp"
#include "sgp/dim2.hpp"
#include "sgp/divisors.hpp"
#include "sgp/fengrao.hpp"
#include "sgp/render.hpp"
#include "sgp/serialize.hpp"
#include "sgp_oracle/oracle.hpp"

namespace sgp::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(std::string_view text, std::string_view what) {
  Int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("bad integer for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<Int> parse_list(std::string_view text, std::string_view what) {
  std::vector<Int> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::pair<Int, Int> parse_range(std::string_view text, std::string_view what) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw UsageError(std::string(what) + " must be LO:HI");
  return {parse_int(text.substr(0, colon), what), parse_int(text.substr(colon + 1), what)};
}

NumericalSemigroup load(const std::string& gens_text) {
  auto gens = parse_list(gens_text, "--gens");
  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  if (*lo >= 1 && *hi > kMaxGeneratorProduct / *lo) {
    throw Error(Errc::ResourceLimit, "smallest*largest generator exceeds " +
                                         std::to_string(kMaxGeneratorProduct) + "; input is beyond desk scale");
  }
  return NumericalSemigroup::from_generators(gens);
}

SearchBudget make_budget(std::optional<Int> nodes, std::optional<Int> max_element) {
  SearchBudget budget;
  if (const char* env = std::getenv("SGP_BUDGET")) {
    budget.max_nodes = static_cast<std::uint64_t>(parse_int(env, "SGP_BUDGET"));
  }
  if (nodes) budget.max_nodes = static_cast<std::uint64_t>(*nodes);
  budget.max_element = max_element;
  return budget;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

/// Values of one draw layer: a comma list, or ground / div:X / newdiv:N / apery:N.
IntSet layer_values(const NumericalSemigroup& s, Int a, Int b, Int origin, std::string_view spec) {
  if (spec == "ground") {
    IntSet out;
    for (Int i = 0; i < b; ++i) out.push_back(origin + (i * a) % b);
    return normalized(std::move(out));
  }
  const auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    const auto kind = spec.substr(0, colon);
    const Int arg = parse_int(spec.substr(colon + 1), "--layer");
    if (kind == "div") return div_set(s, arg).elements;
    if (kind == "newdiv") return new_divisors_via_apery(s, origin, arg);
    if (kind == "apery") return s.apery(arg);
    throw UsageError("unknown layer keyword '" + std::string(kind) + "'");
  }
  return normalized(parse_list(spec, "--layer"));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups, divisor sets and Feng-Rao distances", "sgp"};
  app.require_subcommand(1);

  std::string gens;
  Int n = 0, m = 0, r = 1, q = 2, x_mbar = 0, label_offset = 0;
  std::optional<Int> nodes, max_element, code_length;
  std::string targets, m_range, rows = "0:0", format;
  std::vector<std::string> layers;
  unsigned threads = 1;
  bool closed = false, amenable = false, search = false;
  Int origin = 0, window = 0;
  std::string oracle_kind;

  auto gens_opt = [&](CLI::App* sub) { sub->add_option("--gens", gens, "generators, comma separated")->required(); };

  auto* info = app.add_subcommand("info", "invariants of S");
  gens_opt(info);

  auto* apery = app.add_subcommand("apery", "Apery set Ap(S,n)");
  gens_opt(apery);
  apery->add_option("--n", n)->required();
  apery->add_flag("--closed", closed, "use the two-generator closed form");

  auto* newdiv = app.add_subcommand("new-divisors", "D(mbar+n) minus D(mbar)");
  gens_opt(newdiv);
  newdiv->add_option("--mbar", x_mbar)->required();
  newdiv->add_option("--n", n)->required();
  newdiv->add_flag("--closed", closed, "use the two-generator rectangles");

  auto* divisors = app.add_subcommand("divisors", "D(x1,...,xk)");
  gens_opt(divisors);
  divisors->add_option("--x", targets, "targets, comma separated")->required();

  auto* fr = app.add_subcommand("fr", "classical Feng-Rao distance");
  gens_opt(fr);
  fr->add_option("-m", m)->required();

  auto* frgen = app.add_subcommand("frgen", "generalized Feng-Rao distance");
  gens_opt(frgen);
  frgen->add_option("-m", m)->required();
  frgen->add_option("-r", r)->required();
  frgen->add_flag("--amenable", amenable, "restrict to amenable sets (m must be >= 2c-1)");
  frgen->add_option("--budget", nodes, "node limit");
  frgen->add_option("--max-element", max_element, "largest candidate element");

  auto* frnumber = app.add_subcommand("frnumber", "Feng-Rao number E(S,r)");
  gens_opt(frnumber);
  frnumber->add_option("-r", r)->required();
  frnumber->add_flag("--search", search, "never use a closed form");
  frnumber->add_option("--budget", nodes, "node limit");
  frnumber->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("ghw-table", "GFR against Griesmer order bound");
  gens_opt(table);
  table->add_option("-r", r)->required();
  table->add_option("-q", q)->required();
  table->add_option("--n", code_length, "code length");
  table->add_option("--m-range", m_range, "LO:HI")->required();
  table->add_option("--format", format, "csv, md or json")->check(CLI::IsMember({"csv", "md", "json"}));
  table->add_option("--threads", threads);
  table->add_option("--label-offset", label_offset, "print m minus this offset in md");
  table->add_option("--budget", nodes, "node limit");

  auto* draw = app.add_subcommand("draw", "integer strip drawing");
  draw->add_option("--gens", gens, "a,b")->required();
  draw->add_option("--origin", origin)->required();
  draw->add_option("--rows", rows, "LO:HI");
  draw->add_option("--layer", layers, "name=V1,V2,... or name=ground|div:X|newdiv:N|apery:N");
  draw->add_option("--format", format, "text or svg")->check(CLI::IsMember({"text", "svg"}));

  auto* oracle = app.add_subcommand("oracle", "");
  oracle->group("");
  oracle->add_option("kind", oracle_kind)->required()->check(
      CLI::IsMember({"contains", "apery", "divisors", "fr", "frgen"}));
  gens_opt(oracle);
  oracle->add_option("--n", n);
  oracle->add_option("--x", targets);
  oracle->add_option("-m", m);
  oracle->add_option("-r", r);
  oracle->add_option("--window", window);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (oracle->parsed()) {
      const auto g = parse_list(gens, "--gens");
      Json j;
      if (oracle_kind == "contains") {
        const Int x = parse_int(targets, "--x");
        j["x"] = x;
        j["contains"] = oracle::naive_contains(g, x);
      } else if (oracle_kind == "apery") {
        j["n"] = n;
        j["apery"] = oracle::naive_apery(g, n);
      } else if (oracle_kind == "divisors") {
        j["elements"] = oracle::naive_divisors(g, normalized(parse_list(targets, "--x")));
      } else {
        const Int rr = oracle_kind == "fr" ? 1 : r;
        const auto res = oracle::naive_generalized_fr(g, m, rr, window);
        j["m"] = m;
        j["r"] = rr;
        j["value"] = res.value;
        j["witness"] = res.witness;
        j["certified"] = res.certified;
      }
      print(out, j);
      return kOk;
    }

    const NumericalSemigroup s = load(gens);

    if (info->parsed()) {
      print(out, to_json(s));
    } else if (apery->parsed()) {
      Json j;
      j["n"] = n;
      j["apery"] = closed ? Dim2Semigroup::from(s).apery_closed(n) : s.apery(n);
      print(out, j);
    } else if (newdiv->parsed()) {
      Json j;
      j["mbar"] = x_mbar;
      j["n"] = n;
      j["elements"] = closed ? Dim2Semigroup::from(s).new_divisors(x_mbar, n)
                             : new_divisors_via_apery(s, x_mbar, n);
      print(out, j);
    } else if (divisors->parsed()) {
      print(out, to_json(div_set_multi(s, normalized(parse_list(targets, "--x")))));
    } else if (fr->parsed()) {
      print(out, to_json(classical_fr(s, m)));
    } else if (frgen->parsed()) {
      const SearchBudget budget = make_budget(nodes, max_element);
      print(out, to_json(amenable ? amenable_fr(s, m, r, budget) : generalized_fr(s, m, r, budget)));
    } else if (frnumber->parsed()) {
      const SearchBudget budget = make_budget(nodes, std::nullopt);
      const FengRaoNumber e = search ? feng_rao_number_by_search(s, r, budget) : feng_rao_number(s, r, budget);
      if (format == "json") {
        print(out, to_json(e));
      } else {
        out << e.value << '\n';
      }
    } else if (table->parsed()) {
      const auto [lo, hi] = parse_range(m_range, "--m-range");
      const BoundTable t =
          hierarchy_table(s, r, q, lo, hi, code_length, std::max(1u, threads), make_budget(nodes, std::nullopt));
      if (format == "md") {
        out << to_markdown(t, label_offset);
      } else if (format == "json") {
        print(out, to_json(t));
      } else {
        out << to_csv(t);
      }
    } else if (draw->parsed()) {
      const auto g = s.generators();
      if (g.size() != 2) throw UsageError("draw needs exactly two generators a,b");
      const auto [lo, hi] = parse_range(rows, "--rows");
      StripSpec spec{g[0], g[1], origin, lo, hi, {}};
      for (const auto& text : layers) {
        // A bare value spec names its own layer.
        const auto eq = text.find('=');
        const std::string name = eq == std::string::npos ? text : text.substr(0, eq);
        const auto values = eq == std::string::npos ? std::string_view(text) : std::string_view(text).substr(eq + 1);
        if (name.empty()) throw UsageError("--layer name is empty");
        spec.layers.push_back({name, layer_values(s, g[0], g[1], origin, values), "", '\0'});
      }
      const StripGrid grid = StripGrid::layout(spec);
      out << (format == "svg" ? render_svg(grid) : render_text(grid));
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    Json j;
    j["status"] = "uncertified";
    j["best_bound"] = e.best_bound();
    j["witness"] = e.best().elements;
    print(out, j);
    err << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace sgp::cli
