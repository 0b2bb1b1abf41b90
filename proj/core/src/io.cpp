#include "polyknot/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polyknot/error.hpp"

namespace polyknot {

using json = nlohmann::ordered_json;

namespace {

// Maps JSON pointers to the line their value starts on. The input has
// already been accepted by the JSON parser, so this scan assumes it is
// well formed.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text) : text_(text) {
    skip_ws();
    if (pos_ < text_.size()) value("");
  }

  int line_of(const std::string& pointer) const {
    std::string p = pointer;
    while (true) {
      auto it = lines_.find(p);
      if (it != lines_.end()) return it->second;
      if (p.empty()) return 0;
      p.erase(p.rfind('/'));
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() {
    if (peek() == '\n') ++line_;
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  std::string string_token() {
    std::string out;
    advance();
    while (pos_ < text_.size() && peek() != '"') {
      if (peek() == '\\') advance();
      out.push_back(peek());
      advance();
    }
    advance();
    return out;
  }
  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out.push_back(c);
    }
    return out;
  }
  void value(const std::string& path) {
    lines_.emplace(path, line_);
    char c = peek();
    if (c == '{') {
      advance();
      skip_ws();
      while (pos_ < text_.size() && peek() != '}') {
        std::string key = string_token();
        skip_ws();
        advance();  // ':'
        skip_ws();
        value(path + "/" + escape(key));
        skip_ws();
        if (peek() == ',') advance();
        skip_ws();
      }
      advance();
    } else if (c == '[') {
      advance();
      skip_ws();
      for (int k = 0; pos_ < text_.size() && peek() != ']'; ++k) {
        value(path + "/" + std::to_string(k));
        skip_ws();
        if (peek() == ',') advance();
        skip_ws();
      }
      advance();
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && peek() != ',' && peek() != ']' && peek() != '}' &&
             !std::isspace(static_cast<unsigned char>(peek())))
        advance();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::map<std::string, int> lines_;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : index_(text) {
    try {
      root_ = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      int line = 1;
      for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k)
        if (text[k] == '\n') ++line;
      throw ParseError(line, "", std::string("malformed JSON: ") + e.what());
    }
  }

  const json& root() const { return root_; }

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    int line = index_.line_of(pointer);
    std::string where = pointer.empty() ? "document" : pointer;
    throw ParseError(line, where, "line " + std::to_string(line) + ", field " + where + ": " + message);
  }

  const json& member(const json& obj, const std::string& ptr, const char* key) const {
    if (!obj.is_object()) fail(ptr, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(ptr, std::string("missing field '") + key + "'");
    return *it;
  }

  long integer(const json& v, const std::string& ptr) const {
    if (!v.is_number_integer()) fail(ptr, "expected an integer");
    return v.get<long>();
  }

  Scalar scalar(const json& v, const std::string& ptr) const {
    if (v.is_number_integer()) return Scalar(Rational(v.get<long>()));
    if (v.is_number_float()) fail(ptr, "write non-integer numbers as strings so they parse exactly");
    if (!v.is_string()) fail(ptr, "expected a number string");
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const Error& e) {
      fail(ptr, e.what());
    }
  }

  std::string string(const json& v, const std::string& ptr) const {
    if (!v.is_string()) fail(ptr, "expected a string");
    return v.get<std::string>();
  }

  PolynomialKnot knot(const json& doc, const std::string& ptr) const {
    long n = integer(member(doc, ptr, "dimension"), ptr + "/dimension");
    if (n < 1) fail(ptr + "/dimension", "dimension must be positive");
    const json& coeffs = member(doc, ptr, "coefficients");
    const std::string cptr = ptr + "/coefficients";
    if (!coeffs.is_array()) fail(cptr, "expected an array");
    CoefficientTable table;
    std::set<Index> seen;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const std::string eptr = cptr + "/" + std::to_string(k);
      const json& e = coeffs[k];
      long i = integer(member(e, eptr, "i"), eptr + "/i");
      long j = integer(member(e, eptr, "j"), eptr + "/j");
      if (i < 1) fail(eptr + "/i", "component index must be >= 1");
      if (j < 0) fail(eptr + "/j", "power must be >= 0");
      if (i > n) fail(eptr + "/i", "component " + std::to_string(i) + " exceeds dimension " + std::to_string(n));
      Index idx(static_cast<int>(i), static_cast<int>(j));
      if (!seen.insert(idx).second) fail(eptr, "duplicate coefficient (" + std::to_string(i) + "," + std::to_string(j) + ")");
      table.set(idx, scalar(member(e, eptr, "value"), eptr + "/value"));
    }
    if (table.empty()) fail(cptr, "coefficient table has no nonzero entry");
    return make_knot(static_cast<int>(n), std::move(table));
  }

  SequencePoint sequence(const json& doc, const std::string& ptr) const {
    const json& entries = member(doc, ptr, "entries");
    const std::string eptr0 = ptr + "/entries";
    if (!entries.is_array()) fail(eptr0, "expected an array");
    SequencePoint::Map m;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string eptr = eptr0 + "/" + std::to_string(k);
      long i = integer(member(entries[k], eptr, "i"), eptr + "/i");
      if (i < 1) fail(eptr + "/i", "index must be >= 1");
      if (m.count(static_cast<int>(i))) fail(eptr, "duplicate index " + std::to_string(i));
      m.emplace(static_cast<int>(i), scalar(member(entries[k], eptr, "value"), eptr + "/value"));
    }
    try {
      return SequencePoint(std::move(m));
    } catch (const Error& e) {
      fail(eptr0, e.what());
    }
  }

 private:
  LineIndex index_;
  json root_;
};

json knot_json(const PolynomialKnot& knot) {
  json coeffs = json::array();
  for (const auto& [idx, v] : knot.table().entries())
    coeffs.push_back(json{{"i", idx.component}, {"j", idx.power}, {"value", to_string(v)}});
  return json{{"dimension", knot.dimension()}, {"coefficients", coeffs}};
}

json sequence_json(const SequencePoint& x) {
  json entries = json::array();
  for (const auto& [i, v] : x.entries()) entries.push_back(json{{"i", i}, {"value", to_string(v)}});
  return json{{"entries", entries}};
}

json state_json(const TraceState& state) {
  return std::visit(
      [](const auto& s) -> json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, PolynomialKnot>) {
          return knot_json(s);
        } else {
          return sequence_json(s);
        }
      },
      state);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize_knot(const PolynomialKnot& knot) { return dump(knot_json(knot)); }

PolynomialKnot parse_knot(std::string_view text) {
  Reader r(text);
  return r.knot(r.root(), "");
}

std::string serialize_sequence(const SequencePoint& x) { return dump(sequence_json(x)); }

SequencePoint parse_sequence(std::string_view text) {
  Reader r(text);
  return r.sequence(r.root(), "");
}

std::string serialize_certificate(const CertCertificate& cert) {
  json j;
  j["verdict"] = verdict_name(cert.verdict);
  if (const auto* w = std::get_if<Refuted>(&cert.verdict)) {
    j["witness"] = json{{"s", to_string(w->s)}, {"t", to_string(w->t)}};
  } else {
    j["witness"] = nullptr;
  }
  if (const auto* inc = std::get_if<Inconclusive>(&cert.verdict)) {
    j["depth"] = inc->depth;
  } else {
    j["depth"] = nullptr;
  }
  json evidence = json::array();
  for (const auto& e : cert.evidence) {
    json intervals = json::array();
    for (const auto& iv : e.intervals) intervals.push_back(json::array({to_string(iv.lo), to_string(iv.hi)}));
    evidence.push_back(json{{"kind", e.kind}, {"detail", e.detail}, {"intervals", intervals}});
  }
  j["evidence"] = evidence;
  return dump(j);
}

std::string serialize_trace(const HomotopyTrace& trace) {
  json samples = json::array();
  for (const auto& s : trace.samples)
    samples.push_back(json{{"leg", to_string(s.leg)},
                           {"parameter", to_string(s.parameter)},
                           {"state", state_json(s.state)},
                           {"verdict", s.verdict}});
  json j{{"kind", to_string(trace.kind)},
         {"steps", trace.steps},
         {"source", state_json(trace.source)},
         {"samples", samples}};
  return dump(j);
}

HomotopyTrace parse_trace(std::string_view text) {
  Reader r(text);
  const json& root = r.root();
  TraceKind kind;
  try {
    kind = parse_trace_kind(r.string(r.member(root, "", "kind"), "/kind"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    r.fail("/kind", e.what());
  }
  long steps = r.integer(r.member(root, "", "steps"), "/steps");
  if (steps < 2) r.fail("/steps", "steps must be >= 2");
  bool knots = kind == TraceKind::Linearize;
  auto state = [&](const json& doc, const std::string& ptr) -> TraceState {
    if (knots) return r.knot(doc, ptr);
    return r.sequence(doc, ptr);
  };
  HomotopyTrace trace{kind, static_cast<int>(steps), state(r.member(root, "", "source"), "/source"), {}};
  const json& samples = r.member(root, "", "samples");
  if (!samples.is_array()) r.fail("/samples", "expected an array");
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const std::string p = "/samples/" + std::to_string(k);
    const json& s = samples[k];
    TraceKind leg;
    try {
      leg = parse_trace_kind(r.string(r.member(s, p, "leg"), p + "/leg"));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      r.fail(p + "/leg", e.what());
    }
    Scalar u = r.scalar(r.member(s, p, "parameter"), p + "/parameter");
    if (!u.is_exact()) r.fail(p + "/parameter", "parameter must be an exact rational");
    trace.samples.push_back({leg, u.exact(), state(r.member(s, p, "state"), p + "/state"),
                             r.string(r.member(s, p, "verdict"), p + "/verdict")});
  }
  return trace;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorKind::InvalidArgument, "write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::InvalidArgument, "cannot move output into place at '" + path + "'");
  }
}

}  // namespace polyknot
