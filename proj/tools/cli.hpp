#ifndef GHYPER_TOOLS_CLI_HPP_
#define GHYPER_TOOLS_CLI_HPP_

#include <algorithm>  // for max
#include <chrono>     // for steady_clock
#include <cstdint>    // for uint64_t
#include <iomanip>    // for setw
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <vector>     // for vector

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <ghyper/ghyper.hpp>

namespace ghyper::cli {

  enum ExitCode : int {
    ok                  = 0,
    verification_failed = 1,
    input_error         = 2,
    budget_exceeded     = 3,
    size_limit          = 4,
  };

  using json = nlohmann::ordered_json;

  struct Options {
    std::string              command;
    std::string              groupoid;
    std::string              format  = "text";
    std::uint64_t            budget  = default_section_budget;
    std::size_t              workers = 1;
    bool                     timing  = false;
    std::string              class_token = "all";
    bool                     count_only  = false;
    std::string              within      = "all";
    std::vector<std::string> elements;
    std::vector<std::string> operands;
  };

  //! builtin:NAME[:n], NAME[:n] or file:PATH
  inline Groupoid resolve_groupoid(std::string const& spec) {
    if (spec.empty()) {
      throw InputError("this command needs --groupoid");
    }
    if (spec.rfind("file:", 0) == 0) {
      return load_groupoid(spec.substr(5));
    }
    if (spec.rfind("builtin:", 0) == 0) {
      return build_builtin(spec.substr(8));
    }
    return build_builtin(spec);
  }

  inline std::string fingerprint(Groupoid const& g) {
    std::ostringstream s;
    s << g.name() << ":" << std::hex << std::setw(16) << std::setfill('0') << g.table_hash();
    return s.str();
  }

  inline json describe(Groupoid const& g, Hyperspace const& h) {
    json out = {{"literal", format_literal(g, h)}, {"size", h.size()}};
    if (g.size() <= 3) {
      out["term"] = format_term(g, h);
    }
    return out;
  }

  inline std::string display(Groupoid const& g, Hyperspace const& h) {
    return format_hyperspace(g, h);
  }

  namespace detail {

    inline json table_json(SemigroupView const& s) {
      json rows = json::array();
      for (std::size_t i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.size(); ++j) {
          auto const c = s(i, j);
          row.push_back(c == CayleyTable::absent ? json(nullptr) : json(c));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    inline json elements_json(Groupoid const& g, std::vector<Hyperspace> const& elems) {
      json out = json::array();
      for (std::size_t i = 0; i < elems.size(); ++i) {
        auto d     = describe(g, elems[i]);
        d["index"] = i;
        out.push_back(std::move(d));
      }
      return out;
    }

    inline json flags_json(ClassFlags const& f, std::size_t n) {
      json maxk = json::object();
      for (std::size_t k = 2; k <= n; ++k) {
        maxk[std::to_string(k)] = f.is_maximal_k_linked(k);
      }
      json out = {{"linked_up_to", f.linked_up_to},
                  {"centered", f.centered},
                  {"filter", f.filter},
                  {"ultrafilter", f.ultrafilter},
                  {"maximal_k_linked", maxk},
                  {"self_transversal", f.self_transversal}};
      if (f.shift_invariant) {
        out["shift_invariant"] = *f.shift_invariant;
      }
      return out;
    }

    // Text rendering walks the same JSON the json format prints.
    inline void render_text(json const& v, std::ostream& out, int indent);

    inline std::string scalar_text(json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_null()) {
        return "-";
      }
      return v.dump();
    }

    inline bool is_flat(json const& v) {
      if (!v.is_array()) {
        return false;
      }
      for (auto const& x : v) {
        if (x.is_structured()) {
          return false;
        }
      }
      return true;
    }

    inline bool is_grid(json const& v) {
      if (!v.is_array() || v.empty()) {
        return false;
      }
      for (auto const& r : v) {
        if (!is_flat(r) || r.size() != v.size()) {
          return false;
        }
      }
      return true;
    }

    inline void render_grid(json const& rows, std::ostream& out, int indent) {
      std::size_t width = std::to_string(rows.size()).size();
      for (auto const& r : rows) {
        for (auto const& c : r) {
          width = std::max(width, scalar_text(c).size());
        }
      }
      auto const pad = std::string(static_cast<std::size_t>(indent), ' ');
      out << pad << std::setw(static_cast<int>(width)) << "o" << " |";
      for (std::size_t j = 0; j < rows.size(); ++j) {
        out << ' ' << std::setw(static_cast<int>(width)) << j;
      }
      out << '\n';
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out << pad << std::setw(static_cast<int>(width)) << i << " |";
        for (auto const& c : rows[i]) {
          out << ' ' << std::setw(static_cast<int>(width)) << scalar_text(c);
        }
        out << '\n';
      }
    }

    inline void render_text(json const& v, std::ostream& out, int indent) {
      auto const pad = std::string(static_cast<std::size_t>(indent), ' ');
      if (v.is_object()) {
        for (auto const& [key, value] : v.items()) {
          if (is_grid(value) && value.size() > 1) {
            out << pad << key << ":\n";
            render_grid(value, out, indent + 2);
          } else if (value.is_structured() && !is_flat(value)) {
            out << pad << key << ":\n";
            render_text(value, out, indent + 2);
          } else if (is_flat(value)) {
            out << pad << key << ": [";
            for (std::size_t i = 0; i < value.size(); ++i) {
              out << (i ? ", " : "") << scalar_text(value[i]);
            }
            out << "]\n";
          } else {
            out << pad << key << ": " << scalar_text(value) << '\n';
          }
        }
      } else if (v.is_array()) {
        for (auto const& x : v) {
          if (x.is_object() && x.contains("index")) {
            out << pad << "- [" << x["index"].get<std::size_t>() << "] "
                << scalar_text(x.contains("term") ? x["term"] : x["literal"]);
            for (auto const& [key, value] : x.items()) {
              if (key != "index" && key != "literal" && key != "term") {
                out << "  " << key << '=' << scalar_text(value);
              }
            }
            out << '\n';
          } else if (is_flat(x)) {
            out << pad << "- [";
            for (std::size_t i = 0; i < x.size(); ++i) {
              out << (i ? ", " : "") << scalar_text(x[i]);
            }
            out << "]\n";
          } else if (x.is_structured()) {
            std::ostringstream item;
            render_text(x, item, indent + 2);
            auto text = item.str();
            text.replace(0, static_cast<std::size_t>(indent) + 2, pad + "- ");
            out << text;
          } else {
            out << pad << "- " << scalar_text(x) << '\n';
          }
        }
      } else {
        out << pad << scalar_text(v) << '\n';
      }
    }

    inline std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string q = "\"";
      for (char c : s) {
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
      }
      return q + "\"";
    }

    inline void render_csv_table(Groupoid const& g, SemigroupView const& s, std::ostream& out) {
      out << "# legend\n";
      for (std::size_t i = 0; i < s.size(); ++i) {
        out << "# " << i << ',' << csv_field(display(g, s.elements()[i])) << '\n';
      }
      out << "o";
      for (std::size_t j = 0; j < s.size(); ++j) {
        out << ',' << j;
      }
      out << '\n';
      for (std::size_t i = 0; i < s.size(); ++i) {
        out << i;
        for (std::size_t j = 0; j < s.size(); ++j) {
          auto const c = s(i, j);
          out << ',' << (c == CayleyTable::absent ? std::string() : std::to_string(c));
        }
        out << '\n';
      }
    }

    // Edge i -> i o j labelled j.
    inline void render_dot_table(Groupoid const& g, SemigroupView const& s, std::ostream& out) {
      auto quote = [](std::string const& x) {
        std::string q = "\"";
        for (char c : x) {
          if (c == '"' || c == '\\') {
            q += '\\';
          }
          q += c;
        }
        return q + "\"";
      };
      out << "digraph multiplication {\n";
      for (std::size_t i = 0; i < s.size(); ++i) {
        out << "  n" << i << " [label=" << quote(display(g, s.elements()[i])) << "];\n";
      }
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
          auto const c = s(i, j);
          if (c != CayleyTable::absent) {
            out << "  n" << i << " -> n" << c << " [label=\"" << j << "\"];\n";
          }
        }
      }
      out << "}\n";
    }

    inline std::vector<Hyperspace> selected_elements(Groupoid const& g, Options const& o) {
      if (!o.elements.empty()) {
        std::vector<Hyperspace> out;
        for (auto const& e : o.elements) {
          out.push_back(parse_hyperspace(g, e));
        }
        return out;
      }
      return enumerate_class(g, parse_class(o.within));
    }

    inline json view_summary(Groupoid const& g, SemigroupView const& s) {
      json out = {{"elements", elements_json(g, s.elements())}, {"closed", s.closed()}};
      if (auto const& e = s.first_escape()) {
        out["first_escape"] = {{"left", e->left},
                               {"right", e->right},
                               {"product", describe(g, e->value)}};
      }
      return out;
    }

    inline void require_format(Options const& o, std::initializer_list<char const*> allowed) {
      for (auto const* a : allowed) {
        if (o.format == a) {
          return;
        }
      }
      throw InputError("format '" + o.format + "' is not available for " + o.command);
    }

  }  // namespace detail

  struct Outcome {
    json result;
    int  code = ok;
    //! Pre-rendered csv or dot output, bypassing the json/text renderers.
    std::string raw;
  };

  inline Outcome execute(Options const& o) {
    Outcome out;
    if (o.command == "verify-paper") {
      detail::require_format(o, {"text", "json"});
      json checks = json::array();
      bool all    = true;
      for (auto const& c : reference::run_checks(o.budget, o.workers)) {
        checks.push_back({{"check", c.name},
                          {"verdict", c.passed ? "pass" : "fail"},
                          {"detail", c.detail}});
        all = all && c.passed;
      }
      out.result = {{"checks", checks}, {"verdict", all ? "pass" : "fail"}};
      out.code   = all ? ok : verification_failed;
      return out;
    }

    auto const g = resolve_groupoid(o.groupoid);

    if (o.command == "enumerate") {
      detail::require_format(o, {"text", "json", "csv"});
      auto const spec = parse_class(o.class_token);
      if (o.count_only) {
        std::uint64_t count = 0;
        for_each_in_class(g, spec, [&](Hyperspace const&) { ++count; });
        out.result = {{"class", to_string(spec)}, {"count", count}};
        if (o.format == "csv") {
          out.raw = "count\n" + std::to_string(count) + "\n";
        }
        return out;
      }
      auto const all = enumerate_class(g, spec);
      out.result     = {{"class", to_string(spec)},
                        {"count", all.size()},
                        {"elements", detail::elements_json(g, all)}};
      if (o.format == "csv") {
        std::ostringstream s;
        s << "index,literal,size\n";
        for (std::size_t i = 0; i < all.size(); ++i) {
          s << i << ',' << detail::csv_field(format_literal(g, all[i])) << ','
            << all[i].size() << '\n';
        }
        out.raw = s.str();
      }
      return out;
    }

    if (o.command == "classify") {
      detail::require_format(o, {"text", "json"});
      if (o.operands.empty()) {
        throw InputError("classify needs at least one hyperspace");
      }
      json items = json::array();
      for (auto const& text : o.operands) {
        auto const h = parse_hyperspace(g, text);
        auto       d = describe(g, h);
        d["minimal_sets"] = json::array();
        for (auto m : minimal_sets(h)) {
          d["minimal_sets"].push_back(format_subset(g, m));
        }
        d["support"]    = format_subset(g, support(h));
        d["transversal"] = display(g, transversal(h));
        d["flags"]      = detail::flags_json(classify(h, g), g.size());
        items.push_back(std::move(d));
      }
      out.result = {{"hyperspaces", items}};
      return out;
    }

    if (o.command == "product") {
      detail::require_format(o, {"text", "json"});
      if (o.operands.size() != 2) {
        throw InputError("product needs exactly two hyperspaces");
      }
      auto const u    = parse_hyperspace(g, o.operands[0]);
      auto const v    = parse_hyperspace(g, o.operands[1]);
      auto const p    = product(g, u, v);
      auto const base = product_via_base(g, u, v);
      out.result = {{"left", describe(g, u)},
                    {"right", describe(g, v)},
                    {"product", describe(g, p)},
                    {"base_form_agrees", p == base}};
      if (p != base) {
        out.code = verification_failed;
      }
      return out;
    }

    auto const elems = detail::selected_elements(g, o);

    if (o.command == "table") {
      detail::require_format(o, {"text", "json", "csv", "dot"});
      auto const s = subsemigroup_view(g, elems, o.workers);
      out.result   = detail::view_summary(g, s);
      out.result["table"] = detail::table_json(s);
      if (o.format == "csv" || o.format == "dot") {
        std::ostringstream r;
        if (o.format == "csv") {
          detail::render_csv_table(g, s, r);
        } else {
          detail::render_dot_table(g, s, r);
        }
        out.raw = r.str();
      }
      return out;
    }

    if (o.command == "analyze") {
      detail::require_format(o, {"text", "json"});
      auto const s = subsemigroup_view(g, elems, o.workers);
      if (!s.closed()) {
        throw InputError("the selected elements are not closed under the product");
      }
      auto const sp = special_elements(s);
      json       left_ideals = json::array();
      for (auto const& l : minimal_left_ideals(s)) {
        left_ideals.push_back(l);
      }
      out.result = {{"elements", detail::elements_json(g, s.elements())},
                    {"associative", s.is_associative()},
                    {"idempotents", sp.idempotents},
                    {"left_zeros", sp.left_zeros},
                    {"right_zeros", sp.right_zeros},
                    {"zeros", sp.zeros},
                    {"left_identities", sp.left_identities},
                    {"right_identities", sp.right_identities},
                    {"identities", sp.identities},
                    {"left_cancelable", sp.left_cancelable},
                    {"right_cancelable", sp.right_cancelable},
                    {"minimal_ideal", minimal_ideal(s)},
                    {"minimal_left_ideals", left_ideals},
                    {"center", center(s)}};
      return out;
    }

    if (o.command == "orbits" || o.command == "sections") {
      detail::require_format(o, {"text", "json"});
      auto const s = subsemigroup_view(g, elems, o.workers);
      auto const p = orbits(g, s);
      json       orbit_list = json::array();
      for (auto const& orb : p.orbits) {
        orbit_list.push_back(orb);
      }
      if (o.command == "orbits") {
        out.result = {{"elements", detail::elements_json(g, s.elements())},
                      {"orbits", orbit_list},
                      {"quotient", detail::table_json(p.quotient)}};
        return out;
      }
      auto const secs     = find_sections(s, p, o.budget);
      json       sections = json::array();
      for (auto const& t : secs) {
        json members = json::array();
        for (auto i : t) {
          members.push_back(display(g, s.elements()[i]));
        }
        auto const iso = are_isomorphic(restrict_view(g, s, t), p.quotient).has_value();
        sections.push_back({{"indices", t},
                            {"members", members},
                            {"isomorphic_to_quotient", iso}});
      }
      out.result = {{"elements", s.size()},
                    {"orbits", p.orbits.size()},
                    {"count", secs.size()},
                    {"sections", sections}};
      return out;
    }

    throw InputError("unknown command '" + o.command + "'");
  }

  //! Parses argv-style arguments (without the program name), runs the
  //! command and writes the report.  Returns the process exit code.
  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Inclusion hyperspaces over finite groupoids", "ghyper"};
    app.require_subcommand(1);
    app.add_option("--groupoid", o.groupoid, "builtin:NAME[:n], NAME[:n] or file:PATH");
    app.add_option("--format", o.format, "json, csv, text or dot")
        ->check(CLI::IsMember({"json", "csv", "text", "dot"}));
    app.add_option("--budget", o.budget, "node budget for section search");
    app.add_option("--parallel", o.workers, "worker threads for table construction")
        ->check(CLI::Range(1, 256));
    app.add_flag("--timing", o.timing, "include elapsed time in the report");
    app.fallthrough();

    auto* enumerate = app.add_subcommand("enumerate", "list a class of hyperspaces");
    enumerate->add_option("--class", o.class_token,
                          "all|filters|ultrafilters|linked:k|centered|maxlinked:k|shiftinv");
    enumerate->add_flag("--count-only", o.count_only, "print only the count");
    auto* classify_cmd = app.add_subcommand("classify", "class membership of hyperspaces");
    classify_cmd->add_option("hyperspace", o.operands, "literal <[..],..> or lattice term")
        ->required();
    auto* product_cmd = app.add_subcommand("product", "U o V");
    product_cmd->add_option("operands", o.operands, "two hyperspaces")->expected(2)->required();
    for (auto const* name : {"table", "analyze", "orbits", "sections"}) {
      auto* sub = app.add_subcommand(name);
      sub->add_option("--within", o.within, "class whose members form the element set");
      sub->add_option("--elements", o.elements, "explicit hyperspaces instead of --within");
    }
    app.get_subcommand("table")->description("Cayley table of a set of hyperspaces");
    app.get_subcommand("analyze")->description("special elements, ideals and center");
    app.get_subcommand("orbits")->description("orbits of right shifts and the quotient");
    app.get_subcommand("sections")->description("sub-semigroups meeting each orbit once");
    app.add_subcommand("verify-paper", "replay the reference computations");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }
    o.command = app.get_subcommands().front()->get_name();

    auto const start = std::chrono::steady_clock::now();
    json       report;
    Outcome    outcome;
    int        code = ok;
    try {
      outcome = execute(o);
      code    = outcome.code;
    } catch (BudgetExceeded const& e) {
      err << "error: " << e.what() << '\n';
      return budget_exceeded;
    } catch (SizeLimitError const& e) {
      err << "error: " << e.what() << '\n';
      return size_limit;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }
    if (!outcome.raw.empty()) {
      out << outcome.raw;
      return code;
    }
    report["command"] = o.command;
    if (!o.groupoid.empty()) {
      report["input"] = fingerprint(resolve_groupoid(o.groupoid));
    }
    report["result"] = std::move(outcome.result);
    if (o.timing) {
      report["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    }
    if (o.format == "json") {
      out << report.dump(2) << '\n';
    } else {
      detail::render_text(report, out, 0);
    }
    return code;
  }

}  // namespace ghyper::cli

#endif  // GHYPER_TOOLS_CLI_HPP_
