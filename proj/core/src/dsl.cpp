#include "f1cong/dsl.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>

namespace f1cong {

namespace {

struct Token {
  enum Kind { Ident, Int, Sym, End } kind;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance(char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  Token next() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '#') {
        while (pos < src.size() && src[pos] != '\n') advance(src[pos]);
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(c);
        continue;
      }
      break;
    }
    if (pos >= src.size()) return Token{Token::End, "", 0, line, col};
    int l = line, co = col;
    char c = src[pos];
    if (isalpha((unsigned char)c) || c == '_') {
      std::string t;
      while (pos < src.size()) {
        char d = src[pos];
        bool ident_char = isalnum((unsigned char)d) || d == '_' || d == '/' || d == '.';
        // '-' continues an identifier (closed-immersion) unless it starts an
        // arrow.
        if (d == '-' && !(pos + 1 < src.size() && src[pos + 1] == '>')) ident_char = true;
        if (!ident_char) break;
        t += d;
        advance(d);
      }
      return Token{Token::Ident, t, 0, l, co};
    }
    if (isdigit((unsigned char)c)) {
      std::string t;
      while (pos < src.size() && isdigit((unsigned char)src[pos])) {
        t += src[pos];
        advance(src[pos]);
      }
      return Token{Token::Int, t, std::stoll(t), l, co};
    }
    std::string sym(1, c);
    advance(c);
    if ((sym == "-" || sym == "<") && pos < src.size() && src[pos] == '>') {
      sym += '>';
      advance('>');
    }
    return Token{Token::Sym, sym, 0, l, co};
  }
};

struct Parser {
  Lexer lex;
  Token tok;
  Document doc;

  explicit Parser(const std::string& s) : lex(s) { tok = lex.next(); }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(tok.line, tok.col, msg); }

  void bump() { tok = lex.next(); }

  bool at_sym(const std::string& s) const { return tok.kind == Token::Sym && tok.text == s; }
  bool at_ident(const std::string& s) const { return tok.kind == Token::Ident && tok.text == s; }

  void expect_sym(const std::string& s) {
    if (!at_sym(s)) fail("expected '" + s + "'");
    bump();
  }

  std::string expect_ident() {
    if (tok.kind != Token::Ident && tok.kind != Token::Int)
      fail("expected an identifier");
    std::string t = tok.text;
    bump();
    return t;
  }

  std::string expect_keyword(const std::string& kw) {
    if (!at_ident(kw)) fail("expected '" + kw + "'");
    bump();
    return kw;
  }

  long long expect_int() {
    bool neg = false;
    if (at_sym("-")) {
      neg = true;
      bump();
    }
    if (tok.kind != Token::Int) fail("expected an integer");
    long long v = tok.value;
    bump();
    return neg ? -v : v;
  }

  void declare(const std::string& name) {
    if (doc.has(name)) fail("duplicate name '" + name + "'");
    doc.order.push_back(name);
  }

  const ChartMonoid& monoid_ref(const std::string& name) {
    auto it = doc.monoids.find(name);
    if (it == doc.monoids.end()) fail("unknown monoid '" + name + "'");
    return it->second;
  }

  // ----- elements and monomials --------------------------------------------

  int finite_element(const FiniteMonoid& A, const std::string& label) {
    for (int a = 0; a < A.size; ++a)
      if (A.labels[a] == label) return a;
    fail("unknown element '" + label + "'");
  }

  std::optional<std::size_t> var_index(const FreeMonomialMonoid& M, const std::string& name) {
    for (std::size_t i = 0; i < M.num_vars; ++i)
      if (M.var_names[i] == name) return i;
    return std::nullopt;
  }

  // monomial := "0" | factor { "*"? factor } ; factor := IDENT [ "^" INT ]
  Monomial parse_monomial(const FreeMonomialMonoid& M) {
    if (tok.kind == Token::Int && tok.text == "0") {
      bump();
      return Monomial::make_zero();
    }
    if (tok.kind == Token::Int && tok.text == "1") {
      bump();
      return Monomial::one(M.num_vars);
    }
    Monomial m = Monomial::one(M.num_vars);
    bool any = false;
    while (tok.kind == Token::Ident) {
      auto vi = var_index(M, tok.text);
      if (!vi) {
        if (any) break;
        fail("unknown variable '" + tok.text + "'");
      }
      bump();
      long long e = 1;
      if (at_sym("^")) {
        bump();
        e = expect_int();
      }
      m.exps[*vi] += e;
      any = true;
      if (at_sym("*")) bump();
    }
    if (!any) fail("expected a monomial");
    return m;
  }

  ChartElem parse_element(const ChartMonoid& M) {
    if (chart_is_finite(M)) {
      if (tok.kind != Token::Ident && tok.kind != Token::Int) fail("expected an element");
      int e = finite_element(std::get<FiniteMonoid>(M), tok.text);
      bump();
      return e;
    }
    return parse_monomial(std::get<FreeMonomialMonoid>(M));
  }

  // ----- declarations -------------------------------------------------------

  // mapping := "{" { GEN "->" element ";" } "}", generators of `src`.
  ChartHom parse_mapping(const ChartMonoid& src, const ChartMonoid& tgt) {
    expect_sym("{");
    std::vector<ChartElem> map;
    if (chart_is_finite(src)) {
      const FiniteMonoid& A = std::get<FiniteMonoid>(src);
      std::vector<std::optional<ChartElem>> images(A.size);
      images[A.zero] = chart_zero(tgt);
      images[A.one] = chart_one(tgt);
      while (!at_sym("}")) {
        int a = finite_element(A, expect_ident());
        expect_sym("->");
        images[a] = parse_element(tgt);
        expect_sym(";");
      }
      for (int a = 0; a < A.size; ++a) {
        if (!images[a]) fail("element '" + A.labels[a] + "' has no image");
        map.push_back(*images[a]);
      }
    } else {
      const FreeMonomialMonoid& A = std::get<FreeMonomialMonoid>(src);
      std::vector<std::optional<ChartElem>> images(A.num_vars);
      while (!at_sym("}")) {
        std::string v = expect_ident();
        auto vi = var_index(A, v);
        if (!vi) fail("unknown variable '" + v + "'");
        expect_sym("->");
        images[*vi] = parse_element(tgt);
        expect_sym(";");
      }
      for (std::size_t i = 0; i < A.num_vars; ++i) {
        if (!images[i]) fail("variable '" + A.var_names[i] + "' has no image");
        map.push_back(*images[i]);
      }
    }
    expect_sym("}");
    ChartHom h{src, tgt, std::move(map)};
    h.validate();
    return h;
  }

  void parse_monoid_decl() {
    std::string name = expect_ident();
    declare(name);
    expect_sym("=");
    if (at_ident("table")) {
      bump();
      expect_sym("{");
      expect_keyword("elements");
      std::vector<std::string> labels;
      while (!at_sym(";")) labels.push_back(expect_ident());
      bump();
      int zero = -1, one = -1;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == "0") zero = (int)i;
        if (labels[i] == "1") one = (int)i;
      }
      if (zero < 0 || one < 0) fail("a table monoid needs elements named 0 and 1");
      int n = (int)labels.size();
      std::vector<int> table(n * n, -1);
      for (int a = 0; a < n; ++a) {
        table[a * n + zero] = table[zero * n + a] = zero;
        table[a * n + one] = table[one * n + a] = a;
      }
      expect_keyword("mul");
      expect_sym("{");
      auto idx = [&](const std::string& l) {
        for (int i = 0; i < n; ++i)
          if (labels[i] == l) return i;
        fail("unknown element '" + l + "'");
      };
      while (!at_sym("}")) {
        int a = idx(expect_ident());
        expect_sym("*");
        int b = idx(expect_ident());
        expect_sym("=");
        int c = idx(expect_ident());
        expect_sym(";");
        table[a * n + b] = table[b * n + a] = c;
      }
      bump();
      expect_sym("}");
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (table[a * n + b] < 0)
            fail("product " + labels[a] + "*" + labels[b] + " is unspecified");
      doc.monoids.emplace(name, FiniteMonoid::make(n, zero, one, table, labels));
      return;
    }
    if (at_ident("free")) {
      bump();
      expect_sym("(");
      std::vector<std::string> vars;
      while (!at_sym(")")) {
        vars.push_back(expect_ident());
        if (at_sym(",")) bump();
      }
      bump();
      std::vector<std::size_t> inv;
      if (at_ident("invert")) {
        bump();
        expect_sym("(");
        while (!at_sym(")")) {
          std::string v = expect_ident();
          bool found = false;
          for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == v) {
              inv.push_back(i);
              found = true;
            }
          if (!found) fail("unknown variable '" + v + "'");
          if (at_sym(",")) bump();
        }
        bump();
      }
      doc.monoids.emplace(name, FreeMonomialMonoid::make(vars.size(), inv, vars));
      return;
    }
    fail("expected 'table' or 'free'");
  }

  void parse_hom_decl() {
    std::string name = expect_ident();
    declare(name);
    expect_sym(":");
    std::string src = expect_ident();
    expect_sym("->");
    std::string tgt = expect_ident();
    ChartHom h = parse_mapping(monoid_ref(src), monoid_ref(tgt));
    doc.homs.emplace(name, std::move(h));
    doc.hom_endpoints.emplace(name, std::make_pair(src, tgt));
  }

  void parse_scheme_decl() {
    std::string name = expect_ident();
    declare(name);
    expect_sym("=");
    if (at_ident("affine")) {
      bump();
      expect_sym("(");
      std::string m = expect_ident();
      expect_sym(")");
      // The chart carries the scheme name, so morphism blocks can say
      // "chart C -> <scheme>" for affine targets.
      doc.schemes.emplace(name, MonoidScheme::affine(monoid_ref(m), name));
      return;
    }
    expect_keyword("glue");
    expect_sym("{");
    std::vector<ChartMonoid> charts;
    std::vector<std::string> chart_names;
    std::map<std::pair<int, int>, Overlap> overlaps;
    auto chart_index = [&](const std::string& cn) {
      for (std::size_t i = 0; i < chart_names.size(); ++i)
        if (chart_names[i] == cn) return (int)i;
      fail("unknown chart '" + cn + "'");
    };
    while (!at_sym("}")) {
      if (at_ident("chart")) {
        bump();
        std::string cn = expect_ident();
        expect_sym("=");
        std::string mn = expect_ident();
        expect_sym(";");
        chart_names.push_back(cn);
        charts.push_back(monoid_ref(mn));
        continue;
      }
      expect_keyword("overlap");
      int i = chart_index(expect_ident());
      int j = chart_index(expect_ident());
      expect_keyword("at");
      ChartElem si = parse_element(charts[i]);
      expect_sym(",");
      ChartElem sj = parse_element(charts[j]);
      expect_keyword("via");
      ChartLocalization li = chart_localize(charts[i], si);
      ChartLocalization lj = chart_localize(charts[j], sj);
      ChartHom iso = parse_mapping(li.monoid, lj.monoid);
      expect_sym(";");
      overlaps[{i, j}] = Overlap{si, sj, std::move(iso)};
    }
    bump();
    doc.schemes.emplace(name, MonoidScheme::glue(charts, chart_names, std::move(overlaps)));
  }

  void parse_morphism_decl() {
    std::string name = expect_ident();
    declare(name);
    expect_sym(":");
    std::string srcn = expect_ident();
    expect_sym("->");
    std::string tgtn = expect_ident();
    auto sit = doc.schemes.find(srcn);
    auto tit = doc.schemes.find(tgtn);
    if (sit == doc.schemes.end()) fail("unknown scheme '" + srcn + "'");
    if (tit == doc.schemes.end()) fail("unknown scheme '" + tgtn + "'");
    const MonoidScheme& Y = sit->second;
    const MonoidScheme& X = tit->second;
    std::vector<int> assign(Y.num_charts(), -1);
    std::vector<std::optional<ChartHom>> homs(Y.num_charts());
    auto chart_index = [&](const MonoidScheme& S, const std::string& cn) {
      for (std::size_t i = 0; i < S.chart_names.size(); ++i)
        if (S.chart_names[i] == cn) return (int)i;
      fail("unknown chart '" + cn + "'");
    };
    expect_sym("{");
    while (!at_sym("}")) {
      expect_keyword("chart");
      int i = chart_index(Y, expect_ident());
      expect_sym("->");
      int c = chart_index(X, expect_ident());
      assign[i] = c;
      // The mapping is the Gamma-hom: target chart generators into the source chart.
      homs[i] = parse_mapping(X.charts[c], Y.charts[i]);
      if (at_sym(";")) bump();
    }
    bump();
    std::vector<ChartHom> hv;
    for (std::size_t i = 0; i < Y.num_charts(); ++i) {
      if (assign[i] < 0 || !homs[i]) fail("chart '" + Y.chart_names[i] + "' has no image chart");
      hv.push_back(std::move(*homs[i]));
    }
    doc.morphisms.emplace(name, SchemeMorphism::make(Y, X, assign, std::move(hv)));
  }

  void parse_valuation_decl() {
    std::string name = expect_ident();
    declare(name);
    expect_sym("{");
    std::size_t gr = 0, vr = 0;
    imat v;
    while (!at_sym("}")) {
      if (at_ident("group_rank")) {
        bump();
        gr = (std::size_t)expect_int();
        expect_sym(";");
      } else if (at_ident("value_rank")) {
        bump();
        vr = (std::size_t)expect_int();
        expect_sym(";");
      } else if (at_ident("matrix")) {
        bump();
        expect_sym("[");
        ivec row;
        while (!at_sym("]")) {
          if (at_sym(";")) {
            bump();
            v.push_back(row);
            row.clear();
            continue;
          }
          row.push_back(expect_int());
        }
        bump();
        if (!row.empty()) v.push_back(row);
        expect_sym(";");
      } else {
        fail("expected group_rank, value_rank or matrix");
      }
    }
    bump();
    if (gr == 0 || vr == 0) fail("valuation needs group_rank and value_rank");
    doc.valuations.emplace(name, ValuationData::make(gr, vr, std::move(v)));
  }

  void parse_diagram_decl() {
    std::string name = expect_ident();
    declare(name);
    expect_sym("{");
    std::optional<ValuationData> val;
    std::optional<std::string> phi_name;
    std::optional<int> eta_chart;
    std::optional<ChartHom> eta;
    std::optional<std::pair<int, std::string>> eta_src;  // parsed later
    std::string eta_chart_name;
    // First pass collects val and phi so eta can be typed.
    while (!at_sym("}")) {
      if (at_ident("val")) {
        bump();
        if (at_ident("rank")) {
          bump();
          std::size_t vr = (std::size_t)expect_int();
          expect_keyword("matrix");
          expect_sym("[");
          imat v;
          ivec row;
          while (!at_sym("]")) {
            if (at_sym(";")) {
              bump();
              v.push_back(row);
              row.clear();
              continue;
            }
            row.push_back(expect_int());
          }
          bump();
          if (!row.empty()) v.push_back(row);
          std::size_t gr = v.empty() ? 0 : v[0].size();
          val = ValuationData::make(gr, vr, std::move(v));
        } else {
          std::string vn = expect_ident();
          auto it = doc.valuations.find(vn);
          if (it == doc.valuations.end()) fail("unknown valuation '" + vn + "'");
          val = it->second;
        }
        expect_sym(";");
      } else if (at_ident("phi")) {
        bump();
        phi_name = expect_ident();
        expect_sym(";");
      } else if (at_ident("eta")) {
        bump();
        expect_keyword("chart");
        eta_chart_name = expect_ident();
        if (!val || !phi_name) fail("eta must come after val and phi");
        SchemeMorphism phi = doc.morphism_or_wrapped_hom(*phi_name);
        int ci = -1;
        for (std::size_t i = 0; i < phi.source.chart_names.size(); ++i)
          if (phi.source.chart_names[i] == eta_chart_name) ci = (int)i;
        if (ci < 0) fail("unknown source chart '" + eta_chart_name + "'");
        eta_chart = ci;
        eta = parse_mapping(phi.source.charts[ci], val->group());
        expect_sym(";");
      } else {
        fail("expected val, phi or eta");
      }
    }
    bump();
    if (!val || !phi_name || !eta_chart || !eta) fail("diagram needs val, phi and eta");
    auto d = make_test_diagram(*val, doc.morphism_or_wrapped_hom(*phi_name), *eta_chart,
                               std::move(*eta));
    if (!d) fail("diagram does not commute: the forced nu does not land in A_v");
    doc.diagrams.emplace(name, std::move(*d));
    (void)eta_src;
  }

  Document run() {
    while (tok.kind != Token::End) {
      if (at_ident("monoid")) {
        bump();
        parse_monoid_decl();
      } else if (at_ident("hom")) {
        bump();
        parse_hom_decl();
      } else if (at_ident("scheme")) {
        bump();
        parse_scheme_decl();
      } else if (at_ident("morphism")) {
        bump();
        parse_morphism_decl();
      } else if (at_ident("valuation")) {
        bump();
        parse_valuation_decl();
      } else if (at_ident("diagram")) {
        bump();
        parse_diagram_decl();
      } else if (at_ident("check")) {
        bump();
        std::string prop = expect_ident();
        std::string name = expect_ident();
        if (!doc.morphisms.count(name) && !doc.homs.count(name))
          fail("unknown morphism or hom '" + name + "'");
        doc.checks.emplace_back(prop, name);
      } else if (at_ident("lift")) {
        bump();
        std::string name = expect_ident();
        if (!doc.diagrams.count(name)) fail("unknown diagram '" + name + "'");
        doc.lift_requests.push_back(name);
      } else {
        fail("expected a declaration (monoid, hom, scheme, morphism, valuation, diagram, "
             "check, lift)");
      }
    }
    return std::move(doc);
  }
};

}  // namespace

bool Document::has(const std::string& name) const {
  return monoids.count(name) || homs.count(name) || schemes.count(name) ||
         morphisms.count(name) || valuations.count(name) || diagrams.count(name);
}

SchemeMorphism Document::morphism_or_wrapped_hom(const std::string& name) const {
  auto mit = morphisms.find(name);
  if (mit != morphisms.end()) return mit->second;
  auto hit = homs.find(name);
  if (hit != homs.end()) return mspec_morphism(hit->second);
  throw error("unknown morphism '" + name + "'");
}

Document parse_document(const std::string& text) { return Parser(text).run(); }

std::string emit_dot(const FiniteSpace& space, const std::string& name) {
  std::string out = "digraph \"" + name + "\" {\n";
  for (std::size_t i = 0; i < space.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + space.names[i] + "\"];\n";
  for (auto [i, j] : space.covers())
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

namespace {

nlohmann::json monoid_json(const ChartMonoid& M) {
  nlohmann::json j;
  if (chart_is_finite(M)) {
    const FiniteMonoid& A = std::get<FiniteMonoid>(M);
    j["kind"] = "finite";
    j["size"] = A.size;
    j["zero"] = A.labels[A.zero];
    j["one"] = A.labels[A.one];
    j["elements"] = A.labels;
    nlohmann::json table = nlohmann::json::array();
    for (int a = 0; a < A.size; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < A.size; ++b) row.push_back(A.labels[A.mul(a, b)]);
      table.push_back(row);
    }
    j["table"] = table;
  } else {
    const FreeMonomialMonoid& A = std::get<FreeMonomialMonoid>(M);
    j["kind"] = "free_monomial";
    j["variables"] = A.var_names;
    nlohmann::json inv = nlohmann::json::array();
    for (std::size_t i = 0; i < A.num_vars; ++i)
      if (A.inverted[i]) inv.push_back(A.var_names[i]);
    j["inverted"] = inv;
  }
  return j;
}

nlohmann::json space_json(const FiniteSpace& space) {
  nlohmann::json j;
  j["points"] = space.names;
  nlohmann::json sp = nlohmann::json::array();
  for (auto [i, k] : space.covers()) {
    nlohmann::json e;
    e["from"] = space.names[i];
    e["to"] = space.names[k];
    sp.push_back(e);
  }
  j["specialization_covers"] = sp;
  nlohmann::json cps = nlohmann::json::array();
  for (auto i : space.closed_points()) cps.push_back(space.names[i]);
  j["closed_points"] = cps;
  nlohmann::json sb = nlohmann::json::array();
  for (const auto& [nm, set] : space.subbasis) {
    nlohmann::json u;
    u["name"] = nm;
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t i = 0; i < set.size(); ++i)
      if (set[i]) pts.push_back(space.names[i]);
    u["points"] = pts;
    sb.push_back(u);
  }
  j["subbasis"] = sb;
  return j;
}

}  // namespace

std::string monoid_to_json(const ChartMonoid& M) {
  nlohmann::json j = monoid_json(M);
  j["format"] = 1;
  return j.dump(2);
}

std::string space_to_json(const FiniteSpace& space) {
  nlohmann::json j = space_json(space);
  j["format"] = 1;
  return j.dump(2);
}

std::string monoid_to_dsl(const std::string& name, const ChartMonoid& M) {
  auto lexable = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!isalnum((unsigned char)c) && c != '_' && c != '/' && c != '.') return false;
    return true;
  };
  std::string out = "monoid " + name + " = ";
  if (chart_is_finite(M)) {
    const FiniteMonoid& A = std::get<FiniteMonoid>(M);
    out += "table {\n  elements";
    for (const auto& l : A.labels) {
      if (!lexable(l)) throw error("monoid_to_dsl: element label '" + l + "' is not lexable");
      out += " " + l;
    }
    out += " ;\n  mul {";
    for (int a = 0; a < A.size; ++a)
      for (int b = a; b < A.size; ++b) {
        if (a == A.zero || a == A.one || b == A.zero || b == A.one) continue;
        out += " " + A.labels[a] + "*" + A.labels[b] + " = " + A.labels[A.mul(a, b)] + " ;";
      }
    out += " }\n}\n";
    return out;
  }
  const FreeMonomialMonoid& A = std::get<FreeMonomialMonoid>(M);
  out += "free(";
  for (std::size_t i = 0; i < A.num_vars; ++i) {
    if (!lexable(A.var_names[i]))
      throw error("monoid_to_dsl: variable name '" + A.var_names[i] + "' is not lexable");
    out += (i ? ", " : "") + A.var_names[i];
  }
  out += ")";
  std::string inv;
  for (std::size_t i = 0; i < A.num_vars; ++i)
    if (A.inverted[i]) inv += (inv.empty() ? "" : ", ") + A.var_names[i];
  if (!inv.empty()) out += " invert(" + inv + ")";
  return out + "\n";
}

std::string congruence_to_json(const FiniteMonoid& A, const FiniteCongruence& c) {
  nlohmann::json j;
  j["format"] = 1;
  nlohmann::json classes = nlohmann::json::array();
  for (int rep = 0; rep < A.size; ++rep) {
    if (c.cls[rep] != rep) continue;
    nlohmann::json cl = nlohmann::json::array();
    for (int a = 0; a < A.size; ++a)
      if (c.cls[a] == rep) cl.push_back(A.labels[a]);
    classes.push_back(cl);
  }
  j["classes"] = classes;
  return j.dump(2);
}

std::string symbolic_prime_to_json(const SymbolicPrimeCongruence& p) {
  nlohmann::json j;
  j["format"] = 1;
  nlohmann::json I = nlohmann::json::array();
  for (auto i : p.vanishing) I.push_back(p.ambient.var_names[i]);
  j["I"] = I;
  j["hnf_basis"] = p.lat.basis;
  return j.dump(2);
}

std::string scheme_to_json(const MonoidScheme& X) {
  nlohmann::json j;
  j["format"] = 1;
  nlohmann::json charts = nlohmann::json::array();
  for (std::size_t i = 0; i < X.num_charts(); ++i) {
    nlohmann::json c;
    c["name"] = X.chart_names[i];
    c["monoid"] = monoid_json(X.charts[i]);
    charts.push_back(c);
  }
  j["charts"] = charts;
  nlohmann::json ovl = nlohmann::json::array();
  for (const auto& [key, o] : X.overlaps) {
    nlohmann::json e;
    e["from"] = X.chart_names[key.first];
    e["to"] = X.chart_names[key.second];
    e["localize_at"] = chart_show(X.charts[key.first], o.s_src);
    ovl.push_back(e);
  }
  j["overlaps"] = ovl;
  return j.dump(2);
}

}  // namespace f1cong
