#include "wschreier/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace wschreier::io {
namespace fs = std::filesystem;

namespace {

std::string strip_comments(const std::string& text) {
  std::string out;
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    out += in_comment ? ' ' : c;
  }
  return out;
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("FileNotFound", file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream ss(text);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int to_int(const std::string& tok, const fs::path& file) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw Error("ParseError", file.string() + ": bad integer '" + tok + "'");
  }
}

fs::path resolve(const fs::path& base_file, const std::string& rel) {
  fs::path p(rel);
  if (p.is_absolute()) return p;
  return base_file.parent_path() / p;
}

/// Rows of tokens per (comment-stripped, nonblank) line.
std::vector<std::vector<std::string>> rows_of(const fs::path& file) {
  std::istringstream ss(strip_comments(slurp(file)));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(ss, line)) {
    auto toks = tokens_of(line);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  return rows;
}

void put(std::ofstream& out, const fs::path& file) {
  if (!out) throw Error("WriteError", file.string());
}

}  // namespace

FiniteMonoid read_monoid(const fs::path& file) {
  auto toks = tokens_of(strip_comments(slurp(file)));
  if (toks.empty()) throw Error("ParseError", file.string() + ": empty file");
  int order = to_int(toks[0], file);
  if (order <= 0 || static_cast<int>(toks.size()) != 1 + order * order)
    throw Error("ParseError",
                file.string() + ": expected " + std::to_string(order * order) +
                    " table entries");
  std::vector<int> table(order * order);
  for (int i = 0; i < order * order; ++i) table[i] = to_int(toks[i + 1], file);
  return FiniteMonoid::validate(order, std::move(table));
}

void write_monoid(const fs::path& file, const FiniteMonoid& m) {
  std::ofstream out(file);
  put(out, file);
  out << m.order() << "\n";
  for (int a = 0; a < m.order(); ++a) {
    for (int b = 0; b < m.order(); ++b) out << (b ? " " : "") << m.mul(a, b);
    out << "\n";
  }
}

MonoidHom read_hom(const fs::path& file) {
  auto toks = tokens_of(strip_comments(slurp(file)));
  if (toks.size() < 2) throw Error("ParseError", file.string() + ": too short");
  FiniteMonoid dom = read_monoid(resolve(file, toks[0]));
  FiniteMonoid cod = read_monoid(resolve(file, toks[1]));
  if (static_cast<int>(toks.size()) != 2 + dom.order())
    throw Error("ParseError", file.string() + ": expected " +
                                  std::to_string(dom.order()) + " map entries");
  std::vector<int> map(dom.order());
  for (int i = 0; i < dom.order(); ++i) map[i] = to_int(toks[i + 2], file);
  return MonoidHom::validate(std::move(dom), std::move(cod), std::move(map));
}

void write_hom(const fs::path& file, const MonoidHom& hom,
               const std::string& dom_rel, const std::string& cod_rel) {
  std::ofstream out(file);
  put(out, file);
  out << dom_rel << " " << cod_rel << "\n";
  for (size_t i = 0; i < hom.map.size(); ++i) out << (i ? " " : "") << hom.map[i];
  out << "\n";
}

SplitExtension read_extension(const fs::path& file) {
  auto toks = tokens_of(strip_comments(slurp(file)));
  if (toks.size() != 6)
    throw Error("ParseError",
                file.string() + ": expected six paths (N G H k e s)");
  FiniteMonoid n = read_monoid(resolve(file, toks[0]));
  FiniteMonoid g = read_monoid(resolve(file, toks[1]));
  FiniteMonoid h = read_monoid(resolve(file, toks[2]));
  MonoidHom k = read_hom(resolve(file, toks[3]));
  MonoidHom e = read_hom(resolve(file, toks[4]));
  MonoidHom s = read_hom(resolve(file, toks[5]));
  return SplitExtension::validate(std::move(n), std::move(g), std::move(h),
                                  std::move(k), std::move(e), std::move(s));
}

void write_extension(const fs::path& ext_file, const SplitExtension& ext) {
  fs::path base = ext_file;
  base.replace_extension();
  std::string stem = base.filename().string();
  auto rel = [&](const char* suffix) { return stem + suffix; };
  write_monoid(base.parent_path() / rel(".N.mon"), ext.N);
  write_monoid(base.parent_path() / rel(".G.mon"), ext.G);
  write_monoid(base.parent_path() / rel(".H.mon"), ext.H);
  write_hom(base.parent_path() / rel(".k.hom"), ext.k, rel(".N.mon"), rel(".G.mon"));
  write_hom(base.parent_path() / rel(".e.hom"), ext.e, rel(".G.mon"), rel(".H.mon"));
  write_hom(base.parent_path() / rel(".s.hom"), ext.s, rel(".H.mon"), rel(".G.mon"));
  std::ofstream out(ext_file);
  put(out, ext_file);
  out << rel(".N.mon") << "\n" << rel(".G.mon") << "\n" << rel(".H.mon") << "\n"
      << rel(".k.hom") << "\n" << rel(".e.hom") << "\n" << rel(".s.hom") << "\n";
}

AdmissibleQuotient read_quotient(const fs::path& file) {
  auto rows = rows_of(file);
  if (rows.empty() || rows[0].size() != 2)
    throw Error("ParseError", file.string() + ": expected 'N_file H_file' header");
  FiniteMonoid n = read_monoid(resolve(file, rows[0][0]));
  FiniteMonoid h = read_monoid(resolve(file, rows[0][1]));
  if (static_cast<int>(rows.size()) != 1 + h.order())
    throw Error("ParseError", file.string() + ": expected " +
                                  std::to_string(h.order()) + " fiber rows");
  std::vector<std::vector<int>> fibers(h.order(), std::vector<int>(n.order()));
  for (int x = 0; x < h.order(); ++x) {
    if (static_cast<int>(rows[x + 1].size()) != n.order())
      throw Error("ParseError", file.string() + ": fiber row " +
                                    std::to_string(x) + " has wrong width");
    for (int m = 0; m < n.order(); ++m)
      fibers[x][m] = to_int(rows[x + 1][m], file);
  }
  for (auto& f : fibers) f = canonicalize_classes(f);
  if (auto r = is_admissible(n, h, fibers); !r)
    throw Error("NotAdmissible", file.string() + ": " + r.violation);
  return AdmissibleQuotient::from_fibers(std::move(n), std::move(h),
                                         std::move(fibers));
}

void write_quotient(const fs::path& file, const AdmissibleQuotient& q,
                    const std::string& n_rel, const std::string& h_rel) {
  std::ofstream out(file);
  put(out, file);
  out << n_rel << " " << h_rel << "\n";
  for (int h = 0; h < q.H.order(); ++h) {
    for (int n = 0; n < q.N.order(); ++n)
      out << (n ? " " : "") << q.fibers[h][n];
    out << "\n";
  }
}

ActFile read_action(const fs::path& file) {
  auto rows = rows_of(file);
  if (rows.empty()) throw Error("ParseError", file.string() + ": empty file");
  ActFile out;
  out.class_valued = rows[0][0].rfind("c:", 0) == 0;
  for (auto& row : rows) {
    std::vector<int> vals;
    for (auto& tok : row) {
      bool prefixed = tok.rfind("c:", 0) == 0;
      if (prefixed != out.class_valued)
        throw Error("ParseError",
                    file.string() + ": mixed plain and c: entries");
      vals.push_back(to_int(prefixed ? tok.substr(2) : tok, file));
    }
    out.entries.push_back(std::move(vals));
  }
  return out;
}

void write_preaction(const fs::path& file, const PreAction& a) {
  std::ofstream out(file);
  put(out, file);
  for (const auto& row : a.alpha) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << "\n";
  }
}

void write_action_class(const fs::path& file, const ActionClass& a) {
  std::ofstream out(file);
  put(out, file);
  for (const auto& row : a.class_valued) {
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? " " : "") << "c:" << row[i];
    out << "\n";
  }
}

std::string file_digest(const fs::path& file) {
  std::string bytes = slurp(file);
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace wschreier::io
