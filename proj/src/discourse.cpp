#include "dtr/discourse.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace dtr {

std::string_view to_token(TenseForm t) {
  switch (t) {
    case TenseForm::SimplePast: return "SPAST";
    case TenseForm::SimplePresent: return "SPRES";
    case TenseForm::SimpleFuture: return "SFUT";
    case TenseForm::PastPerfect: return "PPERF";
  }
  return "?";
}

std::string_view to_token(ConnectiveForm c) {
  switch (c) {
    case ConnectiveForm::Because: return "because";
    case ConnectiveForm::AndSo: return "and_so";
    case ConnectiveForm::AndAlso: return "and_also";
  }
  return "?";
}

std::string_view to_token(AspectClass a) {
  return a == AspectClass::Accomplishment ? "accomplishment" : "achievement";
}

std::optional<TenseForm> tense_from_token(std::string_view s) {
  for (auto t : {TenseForm::SimplePast, TenseForm::SimplePresent, TenseForm::SimpleFuture,
                 TenseForm::PastPerfect})
    if (to_token(t) == s) return t;
  return std::nullopt;
}

std::optional<ConnectiveForm> connective_from_token(std::string_view s) {
  for (auto c : {ConnectiveForm::Because, ConnectiveForm::AndSo, ConnectiveForm::AndAlso})
    if (to_token(c) == s) return c;
  return std::nullopt;
}

std::optional<AspectClass> aspect_from_token(std::string_view s) {
  for (auto a : {AspectClass::Accomplishment, AspectClass::Achievement})
    if (to_token(a) == s) return a;
  return std::nullopt;
}

const Clause* Discourse::find(std::string_view id) const {
  auto it = std::find_if(clauses.begin(), clauses.end(),
                         [&](const Clause& c) { return c.id == id; });
  return it == clauses.end() ? nullptr : &*it;
}

std::size_t Discourse::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < clauses.size(); ++i)
    if (clauses[i].id == id) return i;
  return npos;
}

bool Lexicon::add(std::string lemma, AspectClass aspect) {
  return entries_.emplace(std::move(lemma), aspect).second;
}

bool Lexicon::contains(std::string_view lemma) const {
  return entries_.find(lemma) != entries_.end();
}

std::optional<AspectClass> Lexicon::aspect(std::string_view lemma) const {
  auto it = entries_.find(lemma);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      detail_(what) {}

namespace {

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_ident_char);
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

// A field value as written: bare token or decoded quoted string.
struct Value {
  std::string text;
  bool quoted = false;
  std::size_t column = 0;
};

struct Field {
  std::string key;
  std::size_t column = 0;
  Value value;
};

// Cursor over a single line. Columns are 1-based byte offsets.
class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {}

  std::size_t column() const { return pos_ + 1; }
  bool at_end() const { return pos_ >= s_.size(); }

  void skip_space() {
    while (!at_end() && is_space(s_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(line_, column, msg);
  }

  // Bare word: everything up to whitespace.
  std::string_view word() {
    std::size_t start = pos_;
    while (!at_end() && !is_space(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::string_view ident(const char* what) {
    std::size_t col = column();
    std::size_t start = pos_;
    while (!at_end() && is_ident_char(s_[pos_])) ++pos_;
    if (start == pos_) fail(col, std::string("expected ") + what);
    return s_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (at_end() || s_[pos_] != c) fail(column(), std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string quoted() {
    std::size_t open = column();
    expect('"');
    std::string out;
    while (true) {
      if (at_end()) fail(open, "unterminated string");
      char c = s_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (at_end()) fail(open, "unterminated string");
      char e = s_[pos_++];
      switch (e) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        default: fail(pos_ - 1, std::string("unknown escape '\\") + e + "'");
      }
    }
    return out;
  }

  Value value() {
    Value v;
    v.column = column();
    if (!at_end() && s_[pos_] == '"') {
      v.text = quoted();
      v.quoted = true;
    } else {
      v.text = std::string(word());
      if (v.text.empty()) fail(v.column, "missing value");
    }
    return v;
  }

  // key=value fields until end of line.
  std::vector<Field> fields() {
    std::vector<Field> out;
    while (true) {
      skip_space();
      if (at_end()) return out;
      Field f;
      f.column = column();
      f.key = std::string(ident("field name"));
      expect('=');
      f.value = value();
      if (!at_end() && !is_space(s_[pos_])) fail(column(), "expected whitespace after value");
      out.push_back(std::move(f));
    }
  }

  void expect_end() {
    skip_space();
    if (!at_end()) fail(column(), "unexpected trailing text");
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// Splits text into lines, dropping a trailing '\r'. Calls fn(line, line_no)
// for every line that is neither blank nor a comment.
template <class Fn>
void for_each_content_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') fn(line, line_no);
    if (end == text.size()) break;
    start = end + 1;
  }
}

const Field* find_field(const std::vector<Field>& fields, std::string_view key) {
  for (const auto& f : fields)
    if (f.key == key) return &f;
  return nullptr;
}

Clause clause_from_fields(const LineScanner& sc, const std::vector<Field>& fields,
                          std::size_t keyword_col) {
  static const std::set<std::string, std::less<>> known = {"id",  "conn", "subj",
                                                           "verb", "obj", "tense"};
  std::set<std::string, std::less<>> seen;
  for (const auto& f : fields) {
    if (!known.count(f.key)) sc.fail(f.column, "unknown field '" + f.key + "'");
    if (!seen.insert(f.key).second) sc.fail(f.column, "duplicate field '" + f.key + "'");
  }
  auto require = [&](const char* key) -> const Field& {
    const Field* f = find_field(fields, key);
    if (!f) sc.fail(keyword_col, std::string("clause is missing field '") + key + "'");
    return *f;
  };
  auto bare_ident = [&](const Field& f) -> const std::string& {
    if (f.value.quoted || !is_identifier(f.value.text))
      sc.fail(f.value.column, "'" + f.key + "' must be an identifier");
    return f.value.text;
  };

  Clause c;
  c.id = bare_ident(require("id"));
  const Field& subj = require("subj");
  if (!subj.value.quoted && !is_identifier(subj.value.text))
    sc.fail(subj.value.column, "unquoted 'subj' must be an identifier");
  c.subject = subj.value.text;
  c.verb = bare_ident(require("verb"));
  const Field& tense = require("tense");
  auto t = tense.value.quoted ? std::nullopt : tense_from_token(tense.value.text);
  if (!t) sc.fail(tense.value.column, "unknown tense '" + tense.value.text + "'");
  c.tense = *t;
  if (const Field* obj = find_field(fields, "obj")) {
    if (!obj->value.quoted) sc.fail(obj->value.column, "'obj' must be a quoted string");
    c.object = obj->value.text;
  }
  if (const Field* conn = find_field(fields, "conn")) {
    auto k = conn->value.quoted ? std::nullopt : connective_from_token(conn->value.text);
    if (!k) sc.fail(conn->value.column, "unknown connective '" + conn->value.text + "'");
    c.connective = *k;
  }
  return c;
}

}  // namespace

Discourse parse_discourse(std::string_view text, const Lexicon& lexicon) {
  Discourse d;
  std::set<std::string, std::less<>> ids;
  for_each_content_line(text, [&](std::string_view line, std::size_t line_no) {
    LineScanner sc(line, line_no);
    sc.skip_space();
    std::size_t kw_col = sc.column();
    std::string_view kw = sc.word();
    if (kw == "@context") {
      if (d.context_question) sc.fail(kw_col, "duplicate @context header");
      if (!d.clauses.empty()) sc.fail(kw_col, "@context must precede the first clause");
      auto fields = sc.fields();
      if (fields.size() != 1 || fields[0].key != "question")
        sc.fail(kw_col, "@context takes exactly one field: question=\"...\"");
      if (!fields[0].value.quoted) sc.fail(fields[0].value.column, "question must be quoted");
      d.context_question = fields[0].value.text;
      return;
    }
    if (kw != "clause") sc.fail(kw_col, "expected 'clause' or '@context'");

    auto fields = sc.fields();
    Clause c = clause_from_fields(sc, fields, kw_col);
    if (!lexicon.contains(c.verb))
      sc.fail(find_field(fields, "verb")->value.column, "unknown verb lemma '" + c.verb + "'");
    if (ids.count(c.id)) sc.fail(find_field(fields, "id")->value.column,
                                 "duplicate clause id '" + c.id + "'");
    if (d.clauses.empty() && c.connective)
      sc.fail(find_field(fields, "conn")->column, "the first clause cannot carry a connective");
    ids.insert(c.id);
    d.clauses.push_back(std::move(c));
  });
  if (d.clauses.empty()) throw ParseError(1, 1, "discourse contains no clauses");
  return d;
}

Lexicon parse_lexicon(std::string_view text) {
  Lexicon lex;
  for_each_content_line(text, [&](std::string_view line, std::size_t line_no) {
    LineScanner sc(line, line_no);
    sc.skip_space();
    std::size_t kw_col = sc.column();
    if (sc.word() != "verb") sc.fail(kw_col, "expected 'verb'");
    sc.skip_space();
    std::size_t lemma_col = sc.column();
    std::string lemma(sc.ident("verb lemma"));
    if (!sc.at_end() && !is_space(line[sc.column() - 1]))
      sc.fail(sc.column(), "verb lemma must be an identifier");
    auto fields = sc.fields();
    if (fields.size() != 1 || fields[0].key != "class")
      sc.fail(kw_col, "lexicon entry takes exactly one field: class=...");
    auto aspect = fields[0].value.quoted ? std::nullopt : aspect_from_token(fields[0].value.text);
    if (!aspect)
      sc.fail(fields[0].value.column, "unknown aspect class '" + fields[0].value.text + "'");
    if (!lex.add(lemma, *aspect)) sc.fail(lemma_col, "duplicate lemma '" + lemma + "'");
  });
  return lex;
}

std::vector<CausalAxiom> parse_axioms(std::string_view text) {
  std::vector<CausalAxiom> out;
  for_each_content_line(text, [&](std::string_view line, std::size_t line_no) {
    LineScanner sc(line, line_no);
    sc.skip_space();
    std::size_t kw_col = sc.column();
    if (sc.word() != "cause") sc.fail(kw_col, "expected 'cause'");
    CausalAxiom ax;
    for (std::string* slot : {&ax.cause, &ax.effect}) {
      sc.skip_space();
      std::size_t col = sc.column();
      std::string_view w = sc.word();
      if (!is_identifier(w)) sc.fail(col, "expected verb lemma");
      *slot = std::string(w);
    }
    sc.expect_end();
    if (std::find(out.begin(), out.end(), ax) == out.end()) out.push_back(std::move(ax));
  });
  return out;
}

void check_axioms(const std::vector<CausalAxiom>& axioms, const Lexicon& lexicon) {
  for (const auto& ax : axioms)
    for (const auto* lemma : {&ax.cause, &ax.effect})
      if (!lexicon.contains(*lemma))
        throw std::invalid_argument("axiom 'cause " + ax.cause + " " + ax.effect +
                                    "' uses unknown verb lemma '" + *lemma + "'");
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string to_canonical(const Discourse& d) {
  std::ostringstream os;
  if (d.context_question) os << "@context question=" << quote(*d.context_question) << '\n';
  for (const auto& c : d.clauses) {
    os << "clause id=" << c.id;
    if (c.connective) os << " conn=" << to_token(*c.connective);
    os << " subj=" << (is_identifier(c.subject) ? c.subject : quote(c.subject));
    os << " verb=" << c.verb;
    if (c.object) os << " obj=" << quote(*c.object);
    os << " tense=" << to_token(c.tense) << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dtr
