#include "zhodge/profile_io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "zhodge/errors.hpp"

namespace zhodge {

namespace {

using nlohmann::json;

// Input iterator that reports how far the lexer has read, so SAX events can
// be mapped back to source lines.
class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, std::size_t* consumed) : p_(p), consumed_(consumed) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    ++*consumed_;
    return *this;
  }
  CountingIterator operator++(int) {
    auto tmp = *this;
    ++*this;
    return tmp;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) {
    return a.p_ == b.p_;
  }

 private:
  const char* p_ = nullptr;
  std::size_t* consumed_ = nullptr;
};

class LineIndex {
 public:
  explicit LineIndex(std::string_view text) : text_(text) {}

  // Line of the last non-blank character strictly before `offset`.
  std::size_t line_before(std::size_t offset) const {
    offset = std::min(offset, text_.size());
    while (offset > 0 && std::isspace(static_cast<unsigned char>(text_[offset - 1]))) --offset;
    if (offset > 0) --offset;
    std::size_t line = 1;
    for (std::size_t k = 0; k < offset; ++k) {
      if (text_[k] == '\n') ++line;
    }
    return line;
  }

  std::pair<std::size_t, std::size_t> line_col(std::size_t offset) const {
    offset = std::min(offset, text_.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k + 1 < offset; ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

 private:
  std::string_view text_;
};

// Builds the DOM while recording the source line of every value, keyed by
// JSON pointer.
class LocatingSax {
 public:
  LocatingSax(json& root, const std::size_t* consumed, const LineIndex* index)
      : dom_(root), consumed_(consumed), index_(index) {}

  std::unordered_map<std::string, std::size_t> lines;

  bool null() { return scalar([&] { return dom_.null(); }); }
  bool boolean(bool b) { return scalar([&] { return dom_.boolean(b); }); }
  bool number_integer(json::number_integer_t n) {
    return scalar([&] { return dom_.number_integer(n); });
  }
  bool number_unsigned(json::number_unsigned_t n) {
    return scalar([&] { return dom_.number_unsigned(n); });
  }
  bool number_float(json::number_float_t f, const std::string& s) {
    return scalar([&] { return dom_.number_float(f, s); });
  }
  bool string(json::string_t& s) { return scalar([&] { return dom_.string(s); }); }
  bool binary(json::binary_t& b) { return scalar([&] { return dom_.binary(b); }); }

  bool start_object(std::size_t n) {
    record();
    frames_.push_back({false, 0, {}});
    return dom_.start_object(n);
  }
  bool key(json::string_t& k) {
    frames_.back().key = k;
    record();
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    advance();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    record();
    frames_.push_back({true, 0, {}});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    advance();
    return dom_.end_array();
  }

  bool parse_error(std::size_t position, const std::string& /*token*/,
                   const nlohmann::detail::exception& ex) {
    const auto [line, col] = index_->line_col(position);
    // nlohmann's message already names the position; keep only its reason.
    std::string what = ex.what();
    if (auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError(what, line, col);
  }

 private:
  struct Frame {
    bool is_array;
    std::size_t index;
    std::string key;
  };

  template <typename F>
  bool scalar(F&& f) {
    record();
    const bool ok = f();
    advance();
    return ok;
  }

  std::string pointer() const {
    std::string out;
    for (const auto& f : frames_) {
      out += '/';
      out += f.is_array ? std::to_string(f.index) : f.key;
    }
    return out;
  }

  void record() { lines[pointer()] = index_->line_before(*consumed_); }

  void advance() {
    if (!frames_.empty() && frames_.back().is_array) ++frames_.back().index;
  }

  nlohmann::detail::json_sax_dom_parser<json> dom_;
  const std::size_t* consumed_;
  const LineIndex* index_;
  std::vector<Frame> frames_;
};

class ProfileReader {
 public:
  ProfileReader(std::string_view source, const std::unordered_map<std::string, std::size_t>& lines)
      : source_(source), lines_(lines) {}

  [[noreturn]] void fail(const std::string& ptr, const std::string& message) const {
    std::size_t line = 0;
    for (std::string p = ptr;; p = p.substr(0, p.rfind('/'))) {
      if (auto it = lines_.find(p); it != lines_.end()) {
        line = it->second;
        break;
      }
      if (p.empty()) break;
    }
    std::ostringstream os;
    os << source_;
    if (line > 0) os << ':' << line;
    os << ": " << message;
    throw ParseError(os.str(), line, 0);
  }

  std::uint64_t natural(const json& v, const std::string& ptr, const char* what) const {
    if (!v.is_number_unsigned()) {
      fail(ptr, std::string(what) + " must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
  }

  BigInt big_natural(const json& v, const std::string& ptr, const char* what) const {
    if (v.is_string()) {
      const auto& s = v.get_ref<const std::string&>();
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        fail(ptr, std::string(what) + " must be a string of decimal digits");
      }
      return BigInt(s);
    }
    return BigInt(static_cast<unsigned long>(natural(v, ptr, what)));
  }

  CohomologyProfile read(const json& doc) const {
    if (!doc.is_object()) fail("", "profile must be a JSON object");
    static const std::set<std::string> known{"name", "dim", "hodge", "torsion"};
    for (const auto& [k, v] : doc.items()) {
      if (!known.count(k)) fail("/" + k, "unknown key '" + k + "'");
    }
    for (const char* k : {"name", "dim", "hodge"}) {
      if (!doc.contains(k)) fail("", std::string("missing key '") + k + "'");
    }
    if (!doc["name"].is_string()) fail("/name", "name must be a string");
    const std::string name = doc["name"].get<std::string>();
    if (name.empty()) fail("/name", "name must be nonempty");
    const auto dim = natural(doc["dim"], "/dim", "dim");
    if (dim > 1000) fail("/dim", "dim is unreasonably large");

    CohomologyProfile::HodgeNumbers hodge;
    const json& h = doc["hodge"];
    if (!h.is_array()) fail("/hodge", "hodge must be an array of [p, q, h]");
    for (std::size_t k = 0; k < h.size(); ++k) {
      const std::string ptr = "/hodge/" + std::to_string(k);
      const json& e = h[k];
      if (!e.is_array() || e.size() != 3) fail(ptr, "hodge entry must be [p, q, h]");
      const auto p = natural(e[0], ptr + "/0", "p");
      const auto q = natural(e[1], ptr + "/1", "q");
      const auto value = natural(e[2], ptr + "/2", "h");
      if (p > dim || q > dim) {
        fail(ptr, "h^{" + std::to_string(p) + "," + std::to_string(q) +
                      "} lies outside dimension " + std::to_string(dim));
      }
      auto key = std::pair{static_cast<unsigned>(p), static_cast<unsigned>(q)};
      if (hodge.count(key)) fail(ptr, "duplicate hodge entry");
      hodge[key] = value;
    }

    CohomologyProfile::TorsionGroups torsion;
    if (doc.contains("torsion")) {
      const json& t = doc["torsion"];
      if (!t.is_object()) fail("/torsion", "torsion must be an object keyed by degree");
      for (const auto& [key, entries] : t.items()) {
        const std::string ptr = "/torsion/" + key;
        if (key.empty() || key.size() > 6 || key.find_first_not_of("0123456789") != std::string::npos) {
          fail(ptr, "torsion key '" + key + "' is not a cohomological degree");
        }
        const auto degree = static_cast<unsigned>(std::stoul(key));
        if (!entries.is_array()) fail(ptr, "torsion entries must be an array");
        FinAbGroup group;
        for (std::size_t k = 0; k < entries.size(); ++k) {
          const std::string eptr = ptr + "/" + std::to_string(k);
          const json& e = entries[k];
          if (!e.is_array() || e.size() != 3) {
            fail(eptr, "torsion entry must be [prime, exponent, multiplicity]");
          }
          const BigInt p = big_natural(e[0], eptr + "/0", "prime");
          if (!is_prime(p)) fail(eptr + "/0", "not a prime: " + p.get_str());
          const auto exponent = natural(e[1], eptr + "/1", "exponent");
          if (exponent == 0 || exponent > 1'000'000) fail(eptr + "/1", "exponent must be >= 1");
          const auto mult = natural(e[2], eptr + "/2", "multiplicity");
          if (mult > 1'000'000) fail(eptr + "/2", "multiplicity is unreasonably large");
          group = direct_sum(group, FinAbGroup::cyclic(Prime(p), static_cast<unsigned>(exponent), mult));
        }
        if (!group.is_trivial() && (degree < 2 || degree > 2 * dim)) {
          fail(ptr, "torsion in degree " + key + " (allowed: 2.." + std::to_string(2 * dim) + ")");
        }
        torsion[degree] = direct_sum(torsion[degree], group);
      }
    }
    try {
      return CohomologyProfile::make(name, static_cast<unsigned>(dim), std::move(hodge),
                                     std::move(torsion));
    } catch (const InputError& e) {
      fail("", e.what());
    }
  }

 private:
  std::string_view source_;
  const std::unordered_map<std::string, std::size_t>& lines_;
};

}  // namespace

CohomologyProfile parse_profile(std::string_view text, std::string_view source) {
  json doc;
  std::size_t consumed = 0;
  const LineIndex index(text);
  LocatingSax sax(doc, &consumed, &index);
  try {
    json::sax_parse(CountingIterator(text.data(), &consumed),
                    CountingIterator(text.data() + text.size(), &consumed), &sax);
  } catch (const ParseError& e) {
    std::ostringstream os;
    os << source << ':' << e.line() << ':' << e.column() << ": " << e.what();
    throw ParseError(os.str(), e.line(), e.column());
  }
  return ProfileReader(source, sax.lines).read(doc);
}

CohomologyProfile load_profile_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str(), path);
}

std::string profile_to_json(const CohomologyProfile& x) {
  json doc;
  doc["name"] = x.name;
  doc["dim"] = x.dim;
  json hodge = json::array();
  for (const auto& [pq, h] : x.hodge) hodge.push_back({pq.first, pq.second, h});
  doc["hodge"] = hodge;
  if (!x.torsion.empty()) {
    json torsion = json::object();
    for (const auto& [i, group] : x.torsion) {
      json entries = json::array();
      for (const auto& [p, exps] : group.torsion()) {
        // Exponents are sorted, so equal ones are adjacent.
        for (std::size_t k = 0; k < exps.size();) {
          std::size_t run = k;
          while (run < exps.size() && exps[run] == exps[k]) ++run;
          json prime = p.value().fits_ulong_p() ? json(p.value().get_ui()) : json(p.str());
          entries.push_back({prime, exps[k], run - k});
          k = run;
        }
      }
      torsion[std::to_string(i)] = entries;
    }
    doc["torsion"] = torsion;
  }
  return doc.dump(2);
}

}  // namespace zhodge
