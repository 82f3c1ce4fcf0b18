#include "vtx/specfile.hpp"

#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace vtx {

namespace {

struct Row {
  long line;
  std::string text;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Rational rat(long line, const std::string& s) {
  auto r = parse_rational(trim(s));
  if (!r) throw SpecError(line, "bad rational '" + trim(s) + "'");
  return *r;
}

long integer(long line, const std::string& s) {
  Rational r = rat(line, s);
  if (denominator(r) != 1)
    throw SpecError(line, "expected an integer, got '" + trim(s) + "'");
  return to_long(r);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

Vec parse_vec(long line, const std::string& s, const GradedSpace* space) {
  Vec out;
  std::string body = trim(s);
  if (body == "0" || body.empty()) return out;
  std::size_t pos = 0;
  while (pos != std::string::npos) {
    std::size_t next = body.find(" + ", pos);
    std::string term =
        trim(next == std::string::npos ? body.substr(pos)
                                       : body.substr(pos, next - pos));
    std::size_t star = term.find('*');
    if (star == std::string::npos)
      throw SpecError(line, "term '" + term + "' is not coeff*label");
    Rational c = rat(line, term.substr(0, star));
    std::string label = trim(term.substr(star + 1));
    if (label.empty()) throw SpecError(line, "empty label");
    if (space && !space->has(label))
      throw SpecError(line, "unknown label '" + label + "'");
    out.add(label, c);
    pos = next == std::string::npos ? next : next + 3;
  }
  return out;
}

std::string format_vec(const Vec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [l, c] : v.c) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + l;
  }
  return out;
}

GradedSpace parse_space(const std::vector<Row>& rows) {
  if (rows.empty()) throw SpecError(0, "missing [space] section");
  std::vector<std::tuple<long, Rational, std::vector<std::string>>> entries;
  bool integral = true;
  for (const auto& r : rows) {
    auto parts = split(r.text, ':');
    if (parts.size() != 3)
      throw SpecError(r.line, "space row is not 'weight: dim: labels'");
    Rational w = rat(r.line, parts[0]);
    long d = integer(r.line, parts[1]);
    std::vector<std::string> labels;
    std::stringstream ss(trim(parts[2]));
    std::string l;
    while (ss >> l) labels.push_back(l);
    if (static_cast<long>(labels.size()) != d)
      throw SpecError(r.line, "dim " + std::to_string(d) + " but " +
                                  std::to_string(labels.size()) + " labels");
    if (denominator(w) != 1) integral = false;
    entries.emplace_back(r.line, w, labels);
  }
  GradedSpace s;
  s.integer_weights = integral;
  for (const auto& [line, w, labels] : entries)
    for (const auto& l : labels) {
      if (s.has(l)) throw SpecError(line, "duplicate label '" + l + "'");
      s.add(w, l);
    }
  return s;
}

struct TableRow {
  long line;
  std::string u;
  long n;
  std::string v;
  Vec sum;
};

TableRow parse_table_row(const Row& r, const GradedSpace& left,
                         const GradedSpace& right, const GradedSpace& out) {
  std::size_t arrow = r.text.find("->");
  if (arrow == std::string::npos)
    throw SpecError(r.line, "row is missing '->'");
  auto head = split(r.text.substr(0, arrow), ',');
  if (head.size() != 3)
    throw SpecError(r.line, "row head is not 'u, n, v'");
  TableRow row;
  row.line = r.line;
  row.u = trim(head[0]);
  row.n = integer(r.line, head[1]);
  row.v = trim(head[2]);
  if (!left.has(row.u))
    throw SpecError(r.line, "unknown label '" + row.u + "'");
  if (!right.has(row.v))
    throw SpecError(r.line, "unknown label '" + row.v + "'");
  row.sum = parse_vec(r.line, r.text.substr(arrow + 2), &out);
  return row;
}

Vec parse_single_vec(const std::vector<Row>& rows, const GradedSpace& space,
                     const std::string& what) {
  if (rows.empty()) return {};
  if (rows.size() > 1)
    throw SpecError(rows[1].line, what + " takes a single row");
  return parse_vec(rows[0].line, rows[0].text, &space);
}

using Sections = std::map<std::string, std::vector<Row>>;

VertexCoalgebra parse_coalgebra(const Sections& secs, const std::string& pre,
                                bool complete, const Rational& known_max) {
  VertexCoalgebra C;
  C.weight_complete = complete;
  C.known_weight_max = known_max;
  auto sec = [&](const std::string& s) -> const std::vector<Row>& {
    static const std::vector<Row> none;
    auto it = secs.find(pre + s);
    return it == secs.end() ? none : it->second;
  };
  C.space = parse_space(sec("space"));
  C.covacuum = parse_single_vec(sec("covacuum"), C.space, "[covacuum]");
  for (const auto& r : sec("coproducts")) {
    TableRow row = parse_table_row(r, C.space, C.space, C.space);
    Rational pair_wt = C.space.weight(row.u) + C.space.weight(row.v);
    for (const auto& [w, c] : row.sum.c) {
      if (C.space.weight(w) + row.n + 1 != pair_wt)
        throw SpecError(r.line, "weight rule broken for '" + w + "'");
      C.coproducts[w][row.n].add({row.u, row.v}, c);
    }
  }
  return C;
}

void append_space(std::string& out, const GradedSpace& s,
                  const std::string& name) {
  out += "[" + name + "]\n";
  for (const auto& [w, ls] : s.pieces()) {
    out += to_string(w) + ": " + std::to_string(ls.size()) + ":";
    for (const auto& l : ls) out += " " + l;
    out += "\n";
  }
}

void append_coproducts(std::string& out, const VertexCoalgebra& C,
                       const std::string& name) {
  out += "[" + name + "]\n";
  std::map<std::tuple<std::string, long, std::string>, Vec> rows;
  for (const auto& [w, perk] : C.coproducts)
    for (const auto& [k, tv] : perk)
      for (const auto& [key, c] : tv.c)
        rows[{key[0], k, key[1]}].add(w, c);
  for (const auto& [key, sum] : rows)
    out += std::get<0>(key) + ", " + std::to_string(std::get<1>(key)) + ", " +
           std::get<2>(key) + " -> " + format_vec(sum) + "\n";
}

}  // namespace

SpecFile parse_spec_file(const std::string& text) {
  Sections secs;
  std::map<std::string, std::pair<long, std::string>> meta;
  {
    std::string section;
    std::stringstream ss(text);
    std::string raw;
    long line = 0;
    while (std::getline(ss, raw)) {
      ++line;
      std::string t = trim(raw);
      if (t.empty() || t[0] == '#') continue;
      if (t.front() == '[' && t.back() == ']') {
        section = t.substr(1, t.size() - 2);
        if (secs.count(section) || (section == "meta" && !meta.empty()))
          throw SpecError(line, "duplicate section [" + section + "]");
        if (section != "meta") secs[section];
        continue;
      }
      if (section.empty())
        throw SpecError(line, "content before the first section");
      if (section == "meta") {
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
          throw SpecError(line, "meta row is not 'key = value'");
        meta[trim(t.substr(0, eq))] = {line, trim(t.substr(eq + 1))};
      } else {
        secs[section].push_back({line, t});
      }
    }
  }

  auto meta_get = [&](const std::string& k,
                      const std::string& dflt) -> std::string {
    auto it = meta.find(k);
    return it == meta.end() ? dflt : it->second.second;
  };
  auto meta_line = [&](const std::string& k) -> long {
    auto it = meta.find(k);
    return it == meta.end() ? 0 : it->second.first;
  };

  SpecFile f;
  f.name = meta_get("name", "unnamed");
  f.kind = meta_get("kind", "");
  bool complete = meta_get("complete", "true") == "true";
  Rational known_max =
      meta.count("known-max") ? rat(meta_line("known-max"),
                                    meta_get("known-max", "0"))
                              : Rational(0);

  auto sec = [&](const std::string& s) -> const std::vector<Row>& {
    static const std::vector<Row> none;
    auto it = secs.find(s);
    return it == secs.end() ? none : it->second;
  };

  if (f.kind == "vertex-algebra" || f.kind == "vertex-lie") {
    VertexAlgebra A;
    VertexLieAlgebra L;
    GradedSpace space = parse_space(sec("space"));
    Vec vac = parse_single_vec(sec("vacuum"), space, "[vacuum]");
    std::map<std::string, std::map<long, std::map<std::string, Vec>>> table;
    for (const auto& r : sec("products")) {
      TableRow row = parse_table_row(r, space, space, space);
      Rational want = space.weight(row.u) + space.weight(row.v) - row.n - 1;
      for (const auto& [w, c] : row.sum.c)
        if (space.weight(w) != want)
          throw SpecError(r.line, "weight rule broken for '" + w + "'");
      if (!row.sum.empty()) table[row.u][row.n][row.v] = row.sum;
    }
    if (f.kind == "vertex-algebra") {
      A.name = f.name;
      A.space = std::move(space);
      A.vacuum = std::move(vac);
      A.products = std::move(table);
      A.weight_complete = complete;
      A.known_weight_max = known_max;
      if (meta.count("pair-cap"))
        A.pair_weight_cap =
            rat(meta_line("pair-cap"), meta_get("pair-cap", "0"));
      A.validate();
      f.value = std::move(A);
    } else {
      L.name = f.name;
      L.space = std::move(space);
      L.products = std::move(table);
      L.weight_complete = complete;
      L.known_weight_max = known_max;
      L.D.shift = 1;
      for (const auto& r : sec("derivation")) {
        std::size_t arrow = r.text.find("->");
        if (arrow == std::string::npos)
          throw SpecError(r.line, "row is missing '->'");
        std::string u = trim(r.text.substr(0, arrow));
        if (!L.space.has(u))
          throw SpecError(r.line, "unknown label '" + u + "'");
        Vec img = parse_vec(r.line, r.text.substr(arrow + 2), &L.space);
        for (const auto& [w, c] : img.c)
          if (L.space.weight(w) != L.space.weight(u) + 1)
            throw SpecError(r.line, "derivation must raise weight by 1");
        L.D.set(u, img);
      }
      L.validate();
      f.value = std::move(L);
    }
  } else if (f.kind == "vertex-coalgebra" || f.kind == "voc") {
    VertexCoalgebra C = parse_coalgebra(secs, "", complete, known_max);
    C.name = f.name;
    C.validate();
    if (f.kind == "voc") {
      VocData voc;
      voc.rho = parse_single_vec(sec("rho"), C.space, "[rho]");
      voc.base = std::move(C);
      voc.rank = rat(meta_line("rank"), meta_get("rank", "0"));
      f.value = std::move(voc);
    } else {
      f.value = std::move(C);
    }
  } else if (f.kind == "comodule") {
    Comodule M;
    M.name = f.name;
    M.weight_complete = complete;
    M.known_weight_max = known_max;
    M.over = parse_coalgebra(secs, "over-",
                             meta_get("over-complete", "true") == "true",
                             meta.count("over-known-max")
                                 ? rat(meta_line("over-known-max"),
                                       meta_get("over-known-max", "0"))
                                 : Rational(0));
    M.over.name = f.name + "-base";
    M.over.validate();
    M.space = parse_space(sec("space"));
    for (const auto& r : sec("coproducts")) {
      TableRow row = parse_table_row(r, M.over.space, M.space, M.space);
      Rational pair_wt = M.over.space.weight(row.u) + M.space.weight(row.v);
      for (const auto& [w, c] : row.sum.c) {
        if (M.space.weight(w) + row.n + 1 != pair_wt)
          throw SpecError(r.line, "weight rule broken for '" + w + "'");
        M.coproducts[w][row.n].add({row.u, row.v}, c);
      }
    }
    M.validate();
    f.value = std::move(M);
  } else {
    throw SpecError(meta_line("kind"), "unknown kind '" + f.kind + "'");
  }

  if (secs.count("form")) {
    const GradedSpace* space = std::visit(
        [](const auto& s) -> const GradedSpace* {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, VocData>) return &s.base.space;
          else return &s.space;
        },
        f.value);
    BilinearForm form;
    for (const auto& r : secs.at("form")) {
      std::size_t arrow = r.text.find("->");
      if (arrow == std::string::npos)
        throw SpecError(r.line, "row is missing '->'");
      std::string u = trim(r.text.substr(0, arrow));
      if (!space->has(u))
        throw SpecError(r.line, "unknown label '" + u + "'");
      form[u] = parse_vec(r.line, r.text.substr(arrow + 2), space);
    }
    f.form = std::move(form);
  }
  return f;
}

std::string serialize_spec_file(const SpecFile& f) {
  std::string out = "[meta]\nname = " + f.name + "\nkind = " + f.kind + "\n";
  auto flags = [&out](bool complete, const Rational& known_max) {
    if (!complete) {
      out += "complete = false\n";
      out += "known-max = " + to_string(known_max) + "\n";
    }
  };

  if (const auto* A = std::get_if<VertexAlgebra>(&f.value)) {
    flags(A->weight_complete, A->known_weight_max);
    if (A->pair_weight_cap)
      out += "pair-cap = " + to_string(*A->pair_weight_cap) + "\n";
    out += "\n";
    append_space(out, A->space, "space");
    out += "\n[vacuum]\n" + format_vec(A->vacuum) + "\n";
    out += "\n[products]\n";
    for (const auto& [u, pern] : A->products)
      for (const auto& [n, perv] : pern)
        for (const auto& [v, sum] : perv)
          if (!sum.empty())
            out += u + ", " + std::to_string(n) + ", " + v + " -> " +
                   format_vec(sum) + "\n";
  } else if (const auto* L = std::get_if<VertexLieAlgebra>(&f.value)) {
    flags(L->weight_complete, L->known_weight_max);
    out += "\n";
    append_space(out, L->space, "space");
    out += "\n[products]\n";
    for (const auto& [u, pern] : L->products)
      for (const auto& [n, perv] : pern)
        for (const auto& [v, sum] : perv)
          if (!sum.empty())
            out += u + ", " + std::to_string(n) + ", " + v + " -> " +
                   format_vec(sum) + "\n";
    out += "\n[derivation]\n";
    for (const auto& [u, img] : L->D.cols)
      out += u + " -> " + format_vec(img) + "\n";
  } else if (const auto* C = std::get_if<VertexCoalgebra>(&f.value)) {
    flags(C->weight_complete, C->known_weight_max);
    out += "\n";
    append_space(out, C->space, "space");
    out += "\n[covacuum]\n" + format_vec(C->covacuum) + "\n\n";
    append_coproducts(out, *C, "coproducts");
  } else if (const auto* M = std::get_if<Comodule>(&f.value)) {
    flags(M->weight_complete, M->known_weight_max);
    if (!M->over.weight_complete) {
      out += "over-complete = false\n";
      out += "over-known-max = " + to_string(M->over.known_weight_max) + "\n";
    }
    out += "\n";
    append_space(out, M->over.space, "over-space");
    out += "\n[over-covacuum]\n" + format_vec(M->over.covacuum) + "\n\n";
    append_coproducts(out, M->over, "over-coproducts");
    out += "\n";
    append_space(out, M->space, "space");
    out += "\n[coproducts]\n";
    std::map<std::tuple<std::string, long, std::string>, Vec> rows;
    for (const auto& [w, perk] : M->coproducts)
      for (const auto& [k, tv] : perk)
        for (const auto& [key, c] : tv.c) rows[{key[0], k, key[1]}].add(w, c);
    for (const auto& [key, sum] : rows)
      out += std::get<0>(key) + ", " + std::to_string(std::get<1>(key)) +
             ", " + std::get<2>(key) + " -> " + format_vec(sum) + "\n";
  } else if (const auto* V = std::get_if<VocData>(&f.value)) {
    flags(V->base.weight_complete, V->base.known_weight_max);
    out += "rank = " + to_string(V->rank) + "\n\n";
    append_space(out, V->base.space, "space");
    out += "\n[covacuum]\n" + format_vec(V->base.covacuum) + "\n\n";
    append_coproducts(out, V->base, "coproducts");
    out += "\n[rho]\n" + format_vec(V->rho) + "\n";
  }

  if (f.form) {
    out += "\n[form]\n";
    for (const auto& [u, row] : *f.form)
      out += u + " -> " + format_vec(row) + "\n";
  }
  return out;
}

}  // namespace vtx
