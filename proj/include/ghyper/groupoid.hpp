#ifndef GHYPER_GROUPOID_HPP_
#define GHYPER_GROUPOID_HPP_

#include <algorithm>    // for sort, find, next_permutation
#include <array>        // for array
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t, uint32_t, uint64_t
#include <fstream>      // for ifstream
#include <memory>       // for shared_ptr, make_shared
#include <optional>     // for optional
#include <span>         // for span
#include <sstream>      // for ostringstream
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include <nlohmann/json.hpp>

#include "bits.hpp"    // for SubsetMask, max_carrier
#include "errors.hpp"  // for InputError, SizeLimitError

namespace ghyper {

  namespace detail {
    // Images x*A and preimages x^{-1}A of every subset A under every left
    // shift.  Both maps preserve unions, which is how they are filled in.
    struct ShiftTables {
      std::size_t                n = 0;
      std::vector<std::uint32_t> image;     // [x << n | A]
      std::vector<std::uint32_t> preimage;  // [x << n | A]
    };
  }  // namespace detail

  //! A finite carrier {0, ..., n-1} with a binary operation given by its
  //! Cayley table.  Values are immutable once built.
  class Groupoid {
   public:
    Groupoid(std::string                           name,
             std::vector<std::string>              element_names,
             std::vector<std::vector<std::size_t>> table);

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] std::vector<std::string> const& element_names() const noexcept {
      return _element_names;
    }
    [[nodiscard]] std::string const& element_name(std::size_t i) const {
      return _element_names.at(i);
    }
    [[nodiscard]] std::optional<std::size_t>
    index_of(std::string_view element) const;

    //! i * j
    [[nodiscard]] std::size_t operator()(std::size_t i, std::size_t j) const noexcept {
      return _table[i * _n + j];
    }

    [[nodiscard]] bool is_associative() const noexcept {
      return _associative;
    }
    [[nodiscard]] bool is_commutative() const noexcept {
      return _commutative;
    }
    [[nodiscard]] bool is_quasigroup() const noexcept {
      return _quasigroup;
    }
    [[nodiscard]] std::optional<std::size_t> identity() const noexcept {
      return _identity;
    }
    [[nodiscard]] bool is_group() const noexcept {
      return _associative && _quasigroup && _identity.has_value();
    }

    //! x * A = {x * y : y in A}
    [[nodiscard]] SubsetMask image(std::size_t x, SubsetMask a) const noexcept {
      return SubsetMask(_shifts->image[(x << _n) | a.bits()]);
    }
    //! x^{-1}A = {y : x * y in A}
    [[nodiscard]] SubsetMask preimage(std::size_t x, SubsetMask a) const noexcept {
      return SubsetMask(_shifts->preimage[(x << _n) | a.bits()]);
    }

    //! Same table, new display name and element labels.
    [[nodiscard]] Groupoid renamed(std::string              name,
                                   std::vector<std::string> element_names) const;

    //! FNV-1a hash of the table, for report fingerprints.
    [[nodiscard]] std::uint64_t table_hash() const noexcept;

    friend bool operator==(Groupoid const& a, Groupoid const& b) noexcept {
      return a._n == b._n && a._table == b._table;
    }

   private:
    void compute_flags();
    void compute_shifts();

    std::string                                _name;
    std::vector<std::string>                   _element_names;
    std::size_t                                _n = 0;
    std::vector<std::uint8_t>                  _table;
    bool                                       _associative = false;
    bool                                       _commutative = false;
    bool                                       _quasigroup  = false;
    std::optional<std::size_t>                 _identity;
    std::shared_ptr<detail::ShiftTables const> _shifts;
  };

  inline Groupoid::Groupoid(std::string                           name,
                            std::vector<std::string>              element_names,
                            std::vector<std::vector<std::size_t>> table)
      : _name(std::move(name)),
        _element_names(std::move(element_names)),
        _n(_element_names.size()) {
    if (_n == 0) {
      throw InputError("groupoid must have at least one element");
    }
    if (_n > max_carrier) {
      throw SizeLimitError("groupoid has " + std::to_string(_n)
                           + " elements, at most "
                           + std::to_string(max_carrier) + " are supported");
    }
    {
      auto sorted = _element_names;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("element names must be distinct");
      }
    }
    if (table.size() != _n) {
      throw InputError("table has " + std::to_string(table.size())
                       + " rows, expected " + std::to_string(_n));
    }
    _table.reserve(_n * _n);
    for (std::size_t i = 0; i < _n; ++i) {
      if (table[i].size() != _n) {
        throw InputError("table row " + std::to_string(i) + " has "
                         + std::to_string(table[i].size())
                         + " entries, expected " + std::to_string(_n));
      }
      for (auto v : table[i]) {
        if (v >= _n) {
          throw InputError("table entry " + std::to_string(v)
                           + " out of range");
        }
        _table.push_back(static_cast<std::uint8_t>(v));
      }
    }
    compute_flags();
    compute_shifts();
  }

  inline std::optional<std::size_t>
  Groupoid::index_of(std::string_view element) const {
    for (std::size_t i = 0; i < _n; ++i) {
      if (_element_names[i] == element) {
        return i;
      }
    }
    return std::nullopt;
  }

  inline void Groupoid::compute_flags() {
    auto const& g = *this;
    _associative  = true;
    for (std::size_t i = 0; i < _n && _associative; ++i) {
      for (std::size_t j = 0; j < _n && _associative; ++j) {
        for (std::size_t k = 0; k < _n; ++k) {
          if (g(g(i, j), k) != g(i, g(j, k))) {
            _associative = false;
            break;
          }
        }
      }
    }
    _commutative = true;
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = i + 1; j < _n; ++j) {
        _commutative = _commutative && g(i, j) == g(j, i);
      }
    }
    // Latin square: every row and every column is a permutation.
    _quasigroup = true;
    for (std::size_t i = 0; i < _n && _quasigroup; ++i) {
      std::uint32_t row = 0, col = 0;
      for (std::size_t j = 0; j < _n; ++j) {
        row |= std::uint32_t{1} << g(i, j);
        col |= std::uint32_t{1} << g(j, i);
      }
      auto const full = SubsetMask::full(_n).bits();
      _quasigroup     = row == full && col == full;
    }
    _identity.reset();
    for (std::size_t e = 0; e < _n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < _n && ok; ++x) {
        ok = g(e, x) == x && g(x, e) == x;
      }
      if (ok) {
        _identity = e;
        break;
      }
    }
  }

  inline void Groupoid::compute_shifts() {
    auto tables      = std::make_shared<detail::ShiftTables>();
    tables->n        = _n;
    auto const count = std::size_t{1} << _n;
    tables->image.assign(_n * count, 0);
    tables->preimage.assign(_n * count, 0);
    for (std::size_t x = 0; x < _n; ++x) {
      auto* img = tables->image.data() + x * count;
      auto* pre = tables->preimage.data() + x * count;
      for (std::size_t y = 0; y < _n; ++y) {
        img[std::size_t{1} << y] = std::uint32_t{1} << (*this)(x, y);
      }
      for (std::size_t z = 0; z < _n; ++z) {
        std::uint32_t p = 0;
        for (std::size_t y = 0; y < _n; ++y) {
          if ((*this)(x, y) == z) {
            p |= std::uint32_t{1} << y;
          }
        }
        pre[std::size_t{1} << z] = p;
      }
      for (std::size_t a = 1; a < count; ++a) {
        auto const low = a & (~a + 1);
        if (low != a) {
          img[a] = img[a & (a - 1)] | img[low];
          pre[a] = pre[a & (a - 1)] | pre[low];
        }
      }
    }
    _shifts = std::move(tables);
  }

  inline Groupoid Groupoid::renamed(std::string              name,
                                    std::vector<std::string> element_names) const {
    if (element_names.size() != _n) {
      throw InputError("renamed: expected " + std::to_string(_n) + " names");
    }
    Groupoid out = *this;
    out._name    = std::move(name);
    out._element_names = std::move(element_names);
    auto sorted        = out._element_names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("element names must be distinct");
    }
    return out;
  }

  inline std::uint64_t Groupoid::table_hash() const noexcept {
    std::uint64_t h = 0xcbf2'9ce4'8422'2325ULL;
    auto          mix = [&h](std::uint64_t byte) {
      h ^= byte;
      h *= 0x0000'0100'0000'01b3ULL;
    };
    mix(_n);
    for (auto v : _table) {
      mix(v);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Built-in families
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::vector<std::string> numeric_names(std::size_t n) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
      return names;
    }

    template <typename Op>
    std::vector<std::vector<std::size_t>> tabulate(std::size_t n, Op op) {
      std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          t[i][j] = op(i, j);
        }
      }
      return t;
    }
  }  // namespace detail

  //! Instantiates one of the named families.  `n == 0` selects the natural
  //! size for the fixed-size families (symmetric-3, klein-4).
  //!
  //! cyclic:     0..n-1 under addition mod n.
  //! symmetric-3: permutations of {0,1,2} in lexicographic one-line order
  //!             (identity "012" first), (p*q)(i) = p(q(i)).
  //! klein-4:    e, a, b, c under bitwise xor of their indices.
  //! left-zero:  x*y = x.   right-zero: x*y = y.
  inline Groupoid build_builtin(std::string_view name, std::size_t n) {
    auto require_n = [&](std::size_t lo, std::size_t hi) {
      if (n < lo || n > hi) {
        throw InputError("invalid size " + std::to_string(n) + " for "
                         + std::string(name));
      }
    };
    if (name == "cyclic") {
      require_n(1, max_carrier);
      return Groupoid("cyclic:" + std::to_string(n),
                      detail::numeric_names(n),
                      detail::tabulate(n, [n](auto i, auto j) { return (i + j) % n; }));
    }
    if (name == "left-zero") {
      require_n(1, max_carrier);
      return Groupoid("left-zero:" + std::to_string(n),
                      detail::numeric_names(n),
                      detail::tabulate(n, [](auto i, auto) { return i; }));
    }
    if (name == "right-zero") {
      require_n(1, max_carrier);
      return Groupoid("right-zero:" + std::to_string(n),
                      detail::numeric_names(n),
                      detail::tabulate(n, [](auto, auto j) { return j; }));
    }
    if (name == "klein-4") {
      if (n == 0) {
        n = 4;
      }
      require_n(4, 4);
      return Groupoid("klein-4",
                      {"e", "a", "b", "c"},
                      detail::tabulate(4, [](auto i, auto j) { return i ^ j; }));
    }
    if (name == "symmetric-3") {
      if (n == 0) {
        n = 6;
      }
      require_n(6, 6);
      std::vector<std::array<std::size_t, 3>> perms;
      std::array<std::size_t, 3>              p = {0, 1, 2};
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::vector<std::string> names;
      for (auto const& q : perms) {
        names.push_back(std::to_string(q[0]) + std::to_string(q[1])
                        + std::to_string(q[2]));
      }
      auto table = detail::tabulate(6, [&](auto i, auto j) {
        std::array<std::size_t, 3> r{};
        for (std::size_t k = 0; k < 3; ++k) {
          r[k] = perms[i][perms[j][k]];
        }
        return static_cast<std::size_t>(
            std::find(perms.begin(), perms.end(), r) - perms.begin());
      });
      return Groupoid("symmetric-3", std::move(names), std::move(table));
    }
    throw InputError("unknown builtin groupoid '" + std::string(name) + "'");
  }

  //! Parses "cyclic:3", "klein-4", "symmetric-3:6".
  inline Groupoid build_builtin(std::string_view spec) {
    auto const colon = spec.find(':');
    if (colon == std::string_view::npos) {
      return build_builtin(spec, 0);
    }
    auto const      digits = spec.substr(colon + 1);
    std::size_t     n      = 0;
    if (digits.empty() || digits.size() > 3) {
      throw InputError("invalid builtin size in '" + std::string(spec) + "'");
    }
    for (char c : digits) {
      if (c < '0' || c > '9') {
        throw InputError("invalid builtin size in '" + std::string(spec) + "'");
      }
      n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    return build_builtin(spec.substr(0, colon), n);
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley-table documents
  ////////////////////////////////////////////////////////////////////////

  //! Reads a JSON document {"name": ..., "elements": [...], "table": [[...]]}
  //! whose table cells are element names; table[i][j] = row i times column j.
  inline Groupoid parse_groupoid(std::string_view document) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(document);
    } catch (nlohmann::json::parse_error const& e) {
      throw InputError(std::string("malformed groupoid document: ") + e.what());
    }
    if (!doc.is_object()) {
      throw InputError("groupoid document must be an object");
    }
    auto field = [&](char const* key) -> nlohmann::json const& {
      auto it = doc.find(key);
      if (it == doc.end()) {
        throw InputError(std::string("groupoid document lacks field '") + key
                         + "'");
      }
      return *it;
    };
    auto const& name     = field("name");
    auto const& elements = field("elements");
    auto const& rows     = field("table");
    if (!name.is_string()) {
      throw InputError("'name' must be a string");
    }
    if (!elements.is_array()) {
      throw InputError("'elements' must be a list of strings");
    }
    std::vector<std::string> names;
    for (auto const& e : elements) {
      if (!e.is_string()) {
        throw InputError("'elements' must be a list of strings");
      }
      names.push_back(e.get<std::string>());
    }
    if (!rows.is_array() || rows.size() != names.size()) {
      throw InputError("table not square: expected " + std::to_string(names.size())
                       + " rows");
    }
    std::vector<std::vector<std::size_t>> table;
    for (auto const& row : rows) {
      if (!row.is_array() || row.size() != names.size()) {
        throw InputError("table not square: every row needs "
                         + std::to_string(names.size()) + " entries");
      }
      auto& out = table.emplace_back();
      for (auto const& cell : row) {
        if (!cell.is_string()) {
          throw InputError("table entries must be element names");
        }
        auto const s  = cell.get<std::string>();
        auto       it = std::find(names.begin(), names.end(), s);
        if (it == names.end()) {
          throw InputError("table entry '" + s + "' is not a declared element");
        }
        out.push_back(static_cast<std::size_t>(it - names.begin()));
      }
    }
    return Groupoid(name.get<std::string>(), std::move(names), std::move(table));
  }

  inline Groupoid load_groupoid(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open groupoid file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_groupoid(buf.str());
  }

  inline nlohmann::json to_document(Groupoid const& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < g.size(); ++j) {
        row.push_back(g.element_name(g(i, j)));
      }
      rows.push_back(std::move(row));
    }
    return {{"name", g.name()}, {"elements", g.element_names()}, {"table", rows}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Properties and homomorphisms
  ////////////////////////////////////////////////////////////////////////

  struct GroupoidProperties {
    bool                       associative;
    bool                       commutative;
    bool                       quasigroup;
    std::optional<std::size_t> identity;
    SubsetMask                 center;  // elements commuting with everything
  };

  inline GroupoidProperties groupoid_properties(Groupoid const& g) {
    SubsetMask center;
    for (std::size_t x = 0; x < g.size(); ++x) {
      bool central = true;
      for (std::size_t y = 0; y < g.size() && central; ++y) {
        central = g(x, y) == g(y, x);
      }
      if (central) {
        center = center | SubsetMask::singleton(x);
      }
    }
    return {g.is_associative(), g.is_commutative(), g.is_quasigroup(),
            g.identity(), center};
  }

  //! True iff map(x * y) = map(x) * map(y) for all x, y.
  inline bool is_homomorphism(Groupoid const&              from,
                              Groupoid const&              to,
                              std::span<std::size_t const> map) {
    if (map.size() != from.size()) {
      throw InputError("map has length " + std::to_string(map.size())
                       + ", expected " + std::to_string(from.size()));
    }
    for (auto v : map) {
      if (v >= to.size()) {
        throw InputError("map entry " + std::to_string(v) + " out of range");
      }
    }
    for (std::size_t x = 0; x < from.size(); ++x) {
      for (std::size_t y = 0; y < from.size(); ++y) {
        if (map[from(x, y)] != to(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace ghyper

#endif  // GHYPER_GROUPOID_HPP_
