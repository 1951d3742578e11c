// Command line front end: validation, enumeration, classification,
// morphism queries and the example factories, over the .mon/.hom/.ext/
// .quot/.act file formats.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wschreier/constructions.hpp"
#include "wschreier/io.hpp"
#include "wschreier/wact.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wschreier;

namespace {

struct Options {
  bool json_output = false;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
};

// Report accumulating both the human text and the machine payload. The
// JSON variant is byte-identical across runs and thread counts: it omits
// the wall time and is emitted with sorted keys.
class Report {
public:
  explicit Report(std::string command) : start_(clock_t::now()) {
    payload_["command"] = std::move(command);
    payload_["inputs"] = json::array();
  }

  void input(const fs::path& file) {
    payload_["inputs"].push_back(
        {{"path", file.string()}, {"digest", io::file_digest(file)}});
  }

  void line(const std::string& text) { lines_.push_back(text); }

  json& result() { return payload_["result"]; }

  void emit(const Options& opt) const {
    if (opt.json_output) {
      std::cout << payload_.dump(2) << "\n";
      return;
    }
    std::cout << "command: " << payload_["command"].get<std::string>() << "\n";
    for (const auto& in : payload_["inputs"])
      std::cout << "input: " << in["path"].get<std::string>()
                << " digest=" << in["digest"].get<std::string>() << "\n";
    for (const auto& l : lines_) std::cout << l << "\n";
    auto ms = std::chrono::duration<double, std::milli>(clock_t::now() - start_);
    std::printf("time: %.1f ms\n", ms.count());
  }

private:
  using clock_t = std::chrono::steady_clock;
  clock_t::time_point start_;
  json payload_;
  std::vector<std::string> lines_;
};

std::string row_string(const std::vector<int>& row, const char* prefix = "") {
  std::string out;
  for (size_t i = 0; i < row.size(); ++i) {
    if (i) out += " ";
    out += prefix + std::to_string(row[i]);
  }
  return out;
}

json quotient_json(const AdmissibleQuotient& q) {
  json j = json::array();
  for (const auto& f : q.fibers) j.push_back(f);
  return j;
}

json action_json(const ActionClass& a) {
  json j = json::array();
  for (const auto& row : a.class_valued) j.push_back(row);
  return j;
}

void describe_object(Report& rep, int index, const WActObject& obj) {
  rep.line("object " + std::to_string(index) + ":");
  for (int h = 0; h < obj.quotient.H.order(); ++h)
    rep.line("  fiber " + std::to_string(h) + ": " +
             row_string(obj.quotient.fibers[h]));
  for (size_t h = 0; h < obj.action.class_valued.size(); ++h)
    rep.line("  action " + std::to_string(h) + ": " +
             row_string(obj.action.class_valued[h], "c:"));
}

int cmd_check_ext(const fs::path& file, const Options& opt) {
  Report rep("check-ext");
  rep.input(file);
  SplitExtension ext = io::read_extension(file);
  rep.line("orders: N=" + std::to_string(ext.N.order()) +
           " G=" + std::to_string(ext.G.order()) +
           " H=" + std::to_string(ext.H.order()));
  rep.line("axioms: ok");
  auto w = is_weakly_schreier(ext);
  rep.line(std::string("weakly Schreier: ") + (w.weakly_schreier ? "yes" : "no"));
  rep.result()["orders"] = {{"N", ext.N.order()}, {"G", ext.G.order()},
                            {"H", ext.H.order()}};
  rep.result()["axioms_ok"] = true;
  rep.result()["weakly_schreier"] = w.weakly_schreier;
  if (w.weakly_schreier) {
    bool schreier = is_schreier(ext);
    auto count = count_schreier_retractions(ext);
    auto cq = canonical_quotient(ext);
    rep.line(std::string("Schreier: ") + (schreier ? "yes" : "no"));
    rep.line("retractions: " + (count > kDefaultRetractionCap
                                    ? "> " + std::to_string(kDefaultRetractionCap)
                                    : std::to_string(count)));
    rep.line("canonical quotient classes: " + std::to_string(cq.num_classes));
    rep.result()["schreier"] = schreier;
    rep.result()["retraction_count"] = count;
    rep.result()["quotient_classes"] = cq.num_classes;
  }
  rep.emit(opt);
  return 0;
}

int cmd_retractions(const fs::path& file, bool list, std::uint64_t cap,
                    const Options& opt) {
  Report rep("retractions");
  rep.input(file);
  SplitExtension ext = io::read_extension(file);
  auto count = count_schreier_retractions(ext, cap);
  if (!is_weakly_schreier(ext).weakly_schreier)
    throw Error("NotWeaklySchreier", "extension admits no retraction");
  rep.line("count: " + (count > cap ? "> " + std::to_string(cap)
                                    : std::to_string(count)));
  rep.result()["count"] = count;
  if (list) {
    auto rs = enumerate_schreier_retractions(ext, cap);
    rep.result()["retractions"] = json::array();
    for (const auto& r : rs) {
      rep.line("q: " + row_string(r.q));
      rep.result()["retractions"].push_back(r.q);
    }
  }
  rep.emit(opt);
  return 0;
}

int cmd_quotients(const fs::path& nfile, const fs::path& hfile, int max_cells,
                  const Options& opt) {
  Report rep("quotients");
  rep.input(nfile);
  rep.input(hfile);
  FiniteMonoid n = io::read_monoid(nfile);
  FiniteMonoid h = io::read_monoid(hfile);
  EnumerationBounds bounds;
  bounds.max_quotient_cells = max_cells;
  auto qs = enumerate_admissible_quotients(n, h, bounds);
  rep.line("admissible quotients: " + std::to_string(qs.size()));
  rep.result()["count"] = qs.size();
  rep.result()["quotients"] = json::array();
  for (size_t i = 0; i < qs.size(); ++i) {
    rep.line("quotient " + std::to_string(i) + ":");
    for (int x = 0; x < h.order(); ++x)
      rep.line("  fiber " + std::to_string(x) + ": " + row_string(qs[i].fibers[x]));
    rep.result()["quotients"].push_back(quotient_json(qs[i]));
  }
  rep.emit(opt);
  return 0;
}

int cmd_actions(const fs::path& qfile, int max_cells, const Options& opt) {
  Report rep("actions");
  rep.input(qfile);
  AdmissibleQuotient q = io::read_quotient(qfile);
  EnumerationBounds bounds;
  bounds.max_action_cells = max_cells;
  auto acts = enumerate_action_classes(q, bounds);
  rep.line("action classes: " + std::to_string(acts.size()));
  rep.result()["count"] = acts.size();
  rep.result()["actions"] = json::array();
  for (size_t i = 0; i < acts.size(); ++i) {
    rep.line("class " + std::to_string(i) + ":");
    for (size_t h = 0; h < acts[i].class_valued.size(); ++h)
      rep.line("  " + row_string(acts[i].class_valued[h], "c:"));
    rep.result()["actions"].push_back(action_json(acts[i]));
  }
  rep.emit(opt);
  return 0;
}

int cmd_build(const fs::path& qfile, const fs::path& afile, const fs::path& out,
              const Options& opt) {
  Report rep("build");
  rep.input(qfile);
  rep.input(afile);
  AdmissibleQuotient q = io::read_quotient(qfile);
  io::ActFile act = io::read_action(afile);
  if (static_cast<int>(act.entries.size()) != q.H.order())
    throw Error("ParseError", "action rows must match |H|");
  for (const auto& row : act.entries)
    if (static_cast<int>(row.size()) != q.N.order())
      throw Error("ParseError", "action row width must match |N|");
  ActionClass ac;
  ac.quotient = q;
  if (act.class_valued) {
    for (int h = 0; h < q.H.order(); ++h)
      for (int n = 0; n < q.N.order(); ++n)
        if (act.entries[h][n] < 0 || act.entries[h][n] >= q.fiber_classes[h])
          throw Error("ParseError", "class id out of range in fiber " +
                                        std::to_string(h));
    if (auto r = check_class_table(q, act.entries); !r)
      throw Error("NotAnAction", r.violation);
    ac.class_valued = act.entries;
  } else {
    PreAction alpha{act.entries};
    for (const auto& row : alpha.alpha)
      for (int v : row)
        if (v < 0 || v >= q.N.order())
          throw Error("ParseError", "action value out of range");
    if (auto r = is_action(q, alpha); !r) throw Error("NotAnAction", r.violation);
    ac = class_table_of(q, alpha);
  }
  SplitExtension ext = weak_semidirect_product(q, ac);
  io::write_extension(out, ext);
  rep.line("wrote " + out.string() + " (G order " + std::to_string(ext.G.order()) +
           ")");
  rep.result()["output"] = out.string();
  rep.result()["g_order"] = ext.G.order();
  rep.emit(opt);
  return 0;
}

int cmd_classify(const fs::path& nfile, const fs::path& hfile, bool oracle,
                 int max_order, const Options& opt) {
  Report rep("classify");
  rep.input(nfile);
  rep.input(hfile);
  FiniteMonoid n = io::read_monoid(nfile);
  FiniteMonoid h = io::read_monoid(hfile);
  Classification cls = classify_extensions(n, h, {}, opt.threads);
  rep.line("objects: " + std::to_string(cls.objects.size()));
  rep.result()["count"] = cls.objects.size();
  rep.result()["objects"] = json::array();
  for (size_t i = 0; i < cls.objects.size(); ++i) {
    describe_object(rep, static_cast<int>(i), cls.objects[i]);
    rep.result()["objects"].push_back(
        {{"quotient", quotient_json(cls.objects[i].quotient)},
         {"action", action_json(cls.objects[i].action)}});
  }
  rep.line("leq matrix:");
  rep.result()["leq"] = json::array();
  for (const auto& row : cls.leq) {
    std::string bits;
    json jrow = json::array();
    for (bool b : row) {
      bits += b ? '1' : '0';
      jrow.push_back(b ? 1 : 0);
    }
    rep.line("  " + bits);
    rep.result()["leq"].push_back(jrow);
  }
  int code = 0;
  if (oracle) {
    auto brute = brute_force_classify(n, h, max_order, opt.threads);
    rep.line("oracle extensions: " + std::to_string(brute.size()));
    rep.result()["oracle_count"] = brute.size();
    bool match = brute.size() == cls.objects.size();
    if (match) {
      // Match each oracle extension to a distinct WAct object.
      std::vector<int> match_of(brute.size(), -1);
      std::vector<bool> used(cls.objects.size(), false);
      for (size_t i = 0; i < brute.size(); ++i)
        for (size_t j = 0; j < cls.objects.size(); ++j)
          if (!used[j] &&
              extensions_isomorphic(brute[i], functor_S(cls.objects[j]))) {
            match_of[i] = static_cast<int>(j);
            used[j] = true;
            break;
          }
      for (int m : match_of) match = match && m >= 0;
      for (size_t i = 0; i < brute.size() && match; ++i)
        for (size_t j = 0; j < brute.size() && match; ++j)
          match = morphism_exists(brute[i], brute[j]).has_value() ==
                  cls.leq[match_of[i]][match_of[j]];
    }
    rep.line(std::string("oracle agreement: ") + (match ? "yes" : "NO"));
    rep.result()["oracle_agreement"] = match;
    if (!match) code = 1;
  }
  rep.emit(opt);
  return code;
}

int cmd_morphism(const fs::path& afile, const fs::path& bfile,
                 const Options& opt) {
  Report rep("morphism");
  rep.input(afile);
  rep.input(bfile);
  SplitExtension a = io::read_extension(afile);
  SplitExtension b = io::read_extension(bfile);
  auto psi = morphism_exists(a, b);
  if (!psi) {
    rep.line("NONE");
    rep.result()["exists"] = false;
    rep.emit(opt);
    return 1;
  }
  rep.line("map: " + row_string(psi->map.map));
  rep.line(std::string("bijective: ") + (psi->map.bijective() ? "yes" : "no"));
  rep.result()["exists"] = true;
  rep.result()["map"] = psi->map.map;
  rep.result()["bijective"] = psi->map.bijective();
  rep.emit(opt);
  return 0;
}

int cmd_glueing(const fs::path& nfile, const fs::path& hfile,
                const fs::path& ffile, const fs::path& base,
                const Options& opt) {
  Report rep("glueing");
  rep.input(nfile);
  rep.input(hfile);
  rep.input(ffile);
  FiniteMonoid n = io::read_monoid(nfile);
  FiniteMonoid h = io::read_monoid(hfile);
  MonoidHom f = io::read_hom(ffile);
  if (f.dom != h || f.cod != n)
    throw Error("DomainMismatch", "glueing hom must map H into N");
  auto [q, ac] = glueing_quotient(f);
  fs::path qout = base;
  qout += ".quot";
  fs::path aout = base;
  aout += ".act";
  io::write_quotient(qout, q, nfile.string(), hfile.string());
  io::write_action_class(aout, ac);
  rep.line("wrote " + qout.string() + ", " + aout.string());
  rep.result()["quotient"] = qout.string();
  rep.result()["action"] = aout.string();
  rep.result()["classes"] = q.total_classes();
  if (n.idempotent()) {
    SplitExtension gl = semilattice_glueing(f);
    fs::path eout = base;
    eout += ".ext";
    io::write_extension(eout, gl);
    rep.line("wrote " + eout.string() + " (Gl(f) order " +
             std::to_string(gl.G.order()) + ")");
    rep.result()["extension"] = eout.string();
    rep.result()["gl_order"] = gl.G.order();
  }
  rep.emit(opt);
  return 0;
}

int cmd_coarse(const fs::path& nfile, const fs::path& hfile,
               const fs::path& base, const Options& opt) {
  Report rep("coarse");
  rep.input(nfile);
  rep.input(hfile);
  FiniteMonoid n = io::read_monoid(nfile);
  FiniteMonoid h = io::read_monoid(hfile);
  auto dec = right_invertible_submonoid(h);
  AdmissibleQuotient q = coarse_quotient(n, h);
  fs::path qout = base;
  qout += ".quot";
  io::write_quotient(qout, q, nfile.string(), hfile.string());
  // The trivial pre-action; always compatible when the complement is a
  // two-sided ideal, which holds for every finite H.
  fs::path aout = base;
  aout += ".act";
  io::write_preaction(aout, trivial_preaction(n, h));
  rep.line("right invertibles |L(H)|: " + std::to_string(dec.L.members.size()));
  rep.line("classes: " + std::to_string(q.total_classes()));
  rep.line("wrote " + qout.string() + ", " + aout.string());
  rep.result()["l_size"] = dec.L.members.size();
  rep.result()["classes"] = q.total_classes();
  rep.emit(opt);
  return 0;
}

int cmd_matmon(int dim, int field, const fs::path& base, const Options& opt) {
  Report rep("matmon");
  MatrixMonoidExample ex = matrix_monoid(dim, field);
  fs::path mout = base;
  mout += ".mon";
  fs::path aout = base;
  aout += ".act";
  fs::path qout = base;
  qout += ".quot";
  io::write_monoid(mout, ex.monoid);
  io::write_preaction(aout, ex.conjugation);
  AdmissibleQuotient q = coarse_quotient(ex.monoid, ex.monoid);
  io::write_quotient(qout, q, mout.filename().string(), mout.filename().string());
  rep.line("order: " + std::to_string(ex.monoid.order()));
  rep.line("invertible: " + std::to_string(ex.invertible.size()));
  rep.line("coarse classes: " + std::to_string(q.total_classes()));
  rep.line("wrote " + mout.string() + ", " + aout.string() + ", " + qout.string());
  rep.result()["order"] = ex.monoid.order();
  rep.result()["invertible"] = ex.invertible.size();
  rep.result()["coarse_classes"] = q.total_classes();
  rep.emit(opt);
  return 0;
}

int cmd_oracle(const fs::path& nfile, const fs::path& hfile, int max_order,
               const Options& opt) {
  Report rep("oracle");
  rep.input(nfile);
  rep.input(hfile);
  FiniteMonoid n = io::read_monoid(nfile);
  FiniteMonoid h = io::read_monoid(hfile);
  auto brute = brute_force_classify(n, h, max_order, opt.threads);
  rep.line("extensions up to isomorphism: " + std::to_string(brute.size()));
  rep.result()["count"] = brute.size();
  rep.result()["g_orders"] = json::array();
  for (const auto& ext : brute) {
    rep.line("G order " + std::to_string(ext.G.order()));
    rep.result()["g_orders"].push_back(ext.G.order());
  }
  rep.emit(opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weakly Schreier split extensions of finite monoids"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "machine-readable output");
  app.add_option("--threads", opt.threads, "parallelism degree")
      ->check(CLI::PositiveNumber);

  std::string file_a, file_b, file_c, out = "out.ext", base = "out";
  bool list = false, count_only = false, oracle = false;
  std::uint64_t cap = kDefaultRetractionCap;
  int max_cells_q = 36, max_cells_a = 16, max_order = 6;
  int dim = 2, field = 2;

  auto* check = app.add_subcommand("check-ext", "validate an .ext file and report its axioms");
  check->add_option("file", file_a, ".ext file")->required();

  auto* retr = app.add_subcommand("retractions", "count or list Schreier retractions");
  retr->add_option("file", file_a, ".ext file")->required();
  retr->add_flag("--list", list, "list every retraction");
  retr->add_flag("--count", count_only, "print the count only (default)");
  retr->add_option("--cap", cap, "enumeration cap");

  auto* quot = app.add_subcommand("quotients", "enumerate admissible quotients of N x H");
  quot->add_option("N", file_a, "N .mon file")->required();
  quot->add_option("H", file_b, "H .mon file")->required();
  quot->add_option("--max-cells", max_cells_q, "bound on |N|*|H|");

  auto* act = app.add_subcommand("actions", "enumerate action classes over a quotient");
  act->add_option("quotient", file_a, ".quot file")->required();
  act->add_option("--max-cells", max_cells_a, "bound on |N|*|H|");

  auto* build = app.add_subcommand("build", "build the weak semidirect product of a quotient and action");
  build->add_option("quotient", file_a, ".quot file")->required();
  build->add_option("action", file_b, ".act file")->required();
  build->add_option("-o,--output", out, "output .ext file");

  auto* classify = app.add_subcommand("classify", "classify weakly Schreier extensions of H by N");
  classify->add_option("N", file_a, "N .mon file")->required();
  classify->add_option("H", file_b, "H .mon file")->required();
  classify->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");
  classify->add_option("--max-order", max_order, "oracle monoid order cap");

  auto* morph = app.add_subcommand("morphism", "print the unique morphism between two extensions, or NONE");
  morph->add_option("source", file_a, "source .ext")->required();
  morph->add_option("target", file_b, "target .ext")->required();

  auto* glue = app.add_subcommand("glueing", "glueing-style quotient (and Gl(f) for semilattices)");
  glue->add_option("N", file_a, "N .mon file (commutative)")->required();
  glue->add_option("H", file_b, "H .mon file")->required();
  glue->add_option("f", file_c, "f: H -> N .hom file")->required();
  glue->add_option("-o,--output", base, "output base name");

  auto* coarse = app.add_subcommand("coarse", "coarse quotient on N x H");
  coarse->add_option("N", file_a, "N .mon file")->required();
  coarse->add_option("H", file_b, "H .mon file")->required();
  coarse->add_option("-o,--output", base, "output base name");

  auto* matmon = app.add_subcommand("matmon", "matrix monoid with its conjugation pre-action");
  matmon->add_option("--dim", dim, "matrix dimension");
  matmon->add_option("--field", field, "prime field size");
  matmon->add_option("-o,--output", base, "output base name");

  auto* orac = app.add_subcommand("oracle", "brute-force enumeration of extensions (test oracle)");
  orac->add_option("N", file_a, "N .mon file")->required();
  orac->add_option("H", file_b, "H .mon file")->required();
  orac->add_option("--max-order", max_order, "monoid order cap");

  // allow the global flags to appear after the subcommand as well
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check_ext(file_a, opt);
    if (*retr) return cmd_retractions(file_a, list, cap, opt);
    if (*quot) return cmd_quotients(file_a, file_b, max_cells_q, opt);
    if (*act) return cmd_actions(file_a, max_cells_a, opt);
    if (*build) return cmd_build(file_a, file_b, out, opt);
    if (*classify) return cmd_classify(file_a, file_b, oracle, max_order, opt);
    if (*morph) return cmd_morphism(file_a, file_b, opt);
    if (*glue) return cmd_glueing(file_a, file_b, file_c, base, opt);
    if (*coarse) return cmd_coarse(file_a, file_b, base, opt);
    if (*matmon) return cmd_matmon(dim, field, base, opt);
    if (*orac) return cmd_oracle(file_a, file_b, max_order, opt);
  } catch (const Error& e) {
    std::cerr << "error " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
