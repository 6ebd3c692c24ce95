#ifndef GHYPER_TEXT_HPP_
#define GHYPER_TEXT_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "bits.hpp"        // for SubsetMask
#include "errors.hpp"      // for InputError
#include "groupoid.hpp"    // for Groupoid
#include "hyperspace.hpp"  // for Hyperspace, generate, minimal_sets
#include "product.hpp"     // for detail::check_carrier

namespace ghyper {

  inline constexpr std::string_view meet_symbol = "∧";
  inline constexpr std::string_view join_symbol = "∨";

  //! [e,a]
  inline std::string format_subset(Groupoid const& g, SubsetMask a) {
    std::string out = "[";
    bool        first = true;
    for (auto i : a.elements()) {
      if (!first) {
        out += ',';
      }
      out += g.element_name(i);
      first = false;
    }
    return out + "]";
  }

  //! <[0,1,2],[0,1,4]>, minimal sets ascending by mask.
  inline std::string format_literal(Groupoid const& g, Hyperspace const& f) {
    std::string out = "<";
    bool        first = true;
    for (auto m : minimal_sets(f)) {
      if (!first) {
        out += ',';
      }
      out += format_subset(g, m);
      first = false;
    }
    return out + ">";
  }

  namespace detail {

    class TextCursor {
     public:
      TextCursor(Groupoid const& g, std::string_view text) : _g(g), _text(text) {}

      void skip_space() {
        while (_pos < _text.size() && (_text[_pos] == ' ' || _text[_pos] == '\t')) {
          ++_pos;
        }
      }

      [[nodiscard]] bool at_end() {
        skip_space();
        return _pos == _text.size();
      }

      bool accept(std::string_view token) {
        skip_space();
        if (_text.substr(_pos, token.size()) == token) {
          _pos += token.size();
          return true;
        }
        return false;
      }

      void expect(std::string_view token) {
        if (!accept(token)) {
          fail("expected '" + std::string(token) + "'");
        }
      }

      std::size_t element() {
        skip_space();
        auto const start = _pos;
        while (_pos < _text.size() && !is_delimiter()) {
          ++_pos;
        }
        auto const name = _text.substr(start, _pos - start);
        if (name.empty()) {
          fail("expected an element name");
        }
        auto idx = _g.index_of(name);
        if (!idx) {
          _pos = start;
          fail("unknown element '" + std::string(name) + "'");
        }
        return *idx;
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw InputError("cannot parse '" + std::string(_text) + "' at offset "
                         + std::to_string(_pos) + ": " + what);
      }

     private:
      [[nodiscard]] bool is_delimiter() const {
        static constexpr std::string_view single = " \t,[]<>()&|";
        if (single.find(_text[_pos]) != std::string_view::npos) {
          return true;
        }
        auto rest = _text.substr(_pos);
        return rest.starts_with(meet_symbol) || rest.starts_with(join_symbol);
      }

      Groupoid const&  _g;
      std::string_view _text;
      std::size_t      _pos = 0;
    };

    // expr := conj (OR conj)* ; conj := atom (AND atom)* ;
    // atom := element | '(' expr ')'
    inline Hyperspace parse_join(TextCursor& c, Groupoid const& g);

    inline Hyperspace parse_atom(TextCursor& c, Groupoid const& g) {
      if (c.accept("(")) {
        auto inner = parse_join(c, g);
        c.expect(")");
        return inner;
      }
      return principal(g, c.element());
    }

    inline Hyperspace parse_meet(TextCursor& c, Groupoid const& g) {
      auto acc = parse_atom(c, g);
      while (c.accept(meet_symbol) || c.accept("&")) {
        acc = meet(acc, parse_atom(c, g));
      }
      return acc;
    }

    inline Hyperspace parse_join(TextCursor& c, Groupoid const& g) {
      auto acc = parse_meet(c, g);
      while (c.accept(join_symbol) || c.accept("|")) {
        acc = join(acc, parse_meet(c, g));
      }
      return acc;
    }

    // Groups of atoms; `inner` joins atoms inside a group, `outer` joins
    // the groups.
    inline std::string render_groups(Groupoid const&                g,
                                     std::vector<SubsetMask> const& groups,
                                     std::string_view               inner,
                                     std::string_view               outer) {
      std::string out;
      for (std::size_t k = 0; k < groups.size(); ++k) {
        if (k > 0) {
          out += outer;
        }
        auto const elems = groups[k].elements();
        bool const paren = groups.size() > 1 && elems.size() > 1;
        if (paren) {
          out += '(';
        }
        for (std::size_t i = 0; i < elems.size(); ++i) {
          if (i > 0) {
            out += inner;
          }
          out += g.element_name(elems[i]);
        }
        if (paren) {
          out += ')';
        }
      }
      return out;
    }

    inline std::size_t atom_count(std::vector<SubsetMask> const& groups) {
      std::size_t c = 0;
      for (auto m : groups) {
        c += m.size();
      }
      return c;
    }

  }  // namespace detail

  //! Reads either a literal `<[..],[..]>` or a lattice term such as
  //! `e∧(a∨a⁻¹)` over the element names of g.  `&` and `|` are accepted for
  //! meet and join; meet binds tighter.
  inline Hyperspace parse_hyperspace(Groupoid const& g, std::string_view text) {
    detail::TextCursor c(g, text);
    if (c.accept("<")) {
      std::vector<SubsetMask> base;
      do {
        c.expect("[");
        SubsetMask s;
        if (!c.accept("]")) {
          do {
            s = s | SubsetMask::singleton(c.element());
          } while (c.accept(","));
          c.expect("]");
        }
        if (s.empty()) {
          c.fail("empty set in a base");
        }
        base.push_back(s);
      } while (c.accept(","));
      c.expect(">");
      if (!c.at_end()) {
        c.fail("trailing input");
      }
      return generate(g, base);
    }
    auto h = detail::parse_join(c, g);
    if (!c.at_end()) {
      c.fail("trailing input");
    }
    return h;
  }

  //! Shortest of the two normal forms: a join of meets over the minimal
  //! sets of F, or a meet of joins over the minimal sets of F^perp.  Ties
  //! go to the meet of joins.
  inline std::string format_term(Groupoid const& g, Hyperspace const& f) {
    detail::check_carrier(g, f);
    auto const dnf = minimal_sets(f);
    auto const cnf = minimal_sets(transversal(f));
    if (detail::atom_count(cnf) <= detail::atom_count(dnf)) {
      return detail::render_groups(g, cnf, join_symbol, meet_symbol);
    }
    return detail::render_groups(g, dnf, meet_symbol, join_symbol);
  }

  //! Lattice term for carriers of at most 3 elements, literal otherwise.
  inline std::string format_hyperspace(Groupoid const& g, Hyperspace const& f) {
    return g.size() <= 3 ? format_term(g, f) : format_literal(g, f);
  }

}  // namespace ghyper

#endif  // GHYPER_TEXT_HPP_
