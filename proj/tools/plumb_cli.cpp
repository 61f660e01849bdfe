// plumb: classification and certificates for negative definite plumbing trees.
//
// Exit status: 0 success, 1 bad input (including a rejected certificate),
// 2 internal consistency failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plumb/plumb.hpp"

namespace fs = std::filesystem;
using namespace plumb;

namespace {

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PlumbingGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_text(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.detail());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

std::string cycle_string(const Cycle& c) {
  std::string s;
  for (const auto& [v, k] : c) s += (s.empty() ? "" : " ") + v + "=" + std::to_string(k);
  return s;
}

std::string set_string(const std::set<VertexId>& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? "," : "") + v;
  return out + "}";
}

json form_json(const PlumbingGraph& g) {
  IntersectionForm form(g);
  json rows = json::array();
  for (const auto& row : form.entries) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  return {{"ids", form.ids}, {"matrix", rows}};
}

void print_report(const ClassificationReport& r) {
  std::cout << "definiteness       " << to_string(r.form) << "\n"
            << "det                " << to_string(r.det) << "\n"
            << "homology sphere    " << (r.zhs ? "yes" : "no") << "\n"
            << "rational           " << yes_no(r.rational) << "\n"
            << "L-space            " << yes_no(r.l_space) << "\n"
            << "pi1 left-orderable " << yes_no(r.pi1_left_orderable) << "\n"
            << "taut foliation     " << yes_no(r.taut_foliation) << "\n";
  if (r.m_gamma)
    std::cout << "m(G)               " << (r.m_is_upper_bound ? "<= " : "") << *r.m_gamma << " "
              << set_string(*r.bad_set) << "\n";
  if (r.certificate_path) std::cout << "certificate        " << *r.certificate_path << "\n";
}

void print_sequence(const PlumbingGraph& g, const ComputationSequence& seq) {
  auto ids = g.ids();
  std::string order;
  for (const auto& id : ids) order += (order.empty() ? "" : " ") + id;
  std::printf("%6s  %-12s %7s  cycle (%s)\n", "step", "vertex", "pairing", order.c_str());
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& s = seq.steps[i];
    std::string cyc;
    for (const auto& id : ids) cyc += (cyc.empty() ? "" : " ") + std::to_string(s.before.at(id));
    std::printf("%6zu  %-12s %7lld  (%s)\n", i, s.vertex.c_str(), static_cast<long long>(s.pairing), cyc.c_str());
  }
  std::cout << "Z_min: " << cycle_string(seq.final) << "\n";
}

struct Flags {
  std::string file;
  bool json = false;
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rationality, L-space and left-orderability verdicts for plumbing trees"};
  app.require_subcommand(1);

  Flags f;
  bool with_badset = false, debug_form = false, minimize_first = false;
  std::string cert_out, edge_spec, out_dir, bad_spec;
  std::size_t max_vertices = 6, badset_cap = 14;
  int min_weight = -5;
  unsigned jobs = 1;
  bool minimal_only = false;
  std::optional<std::uint64_t> seed;
  long p = 0, q = 0, r = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Full classification report");
  classify_cmd->add_option("file", f.file, "Graph file ('-' for stdin)")->required();
  classify_cmd->add_flag("--json", f.json);
  classify_cmd->add_flag("--with-badset", with_badset, "Compute m(G) and a minimal bad set");
  classify_cmd->add_option("--badset-cap", badset_cap, "Largest graph for the exact bad-set search");
  classify_cmd->add_option("--with-certificate", cert_out, "Write a certificate for non-rational graphs");
  classify_cmd->add_flag("--debug-form", debug_form, "Include the intersection form");

  auto* census_cmd = app.add_subcommand("census", "Enumerate and classify negative definite trees");
  census_cmd->add_option("--max-vertices", max_vertices)->check(CLI::Range(1, 8));
  census_cmd->add_option("--min-weight", min_weight)->check(CLI::Range(-9, -1));
  census_cmd->add_option("--out", out_dir, "Directory for census.jsonl");
  census_cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  census_cmd->add_flag("--minimal", minimal_only, "Only minimal graphs");
  census_cmd->add_flag("--with-badset", with_badset);

  auto* zmin_cmd = app.add_subcommand("zmin", "Minimal cycle and Artin's chi(Z_min)");
  zmin_cmd->add_option("file", f.file)->required();
  zmin_cmd->add_flag("--json", f.json);

  auto* seq_cmd = app.add_subcommand("sequence", "Laufer computation sequence");
  seq_cmd->add_option("file", f.file)->required();
  seq_cmd->add_flag("--json", f.json);
  seq_cmd->add_option("--seed", seed, "Random tie-breaking instead of smallest id");

  auto* bad_cmd = app.add_subcommand("bad", "Minimal bad vertex set, or test a given set");
  bad_cmd->add_option("file", f.file)->required();
  bad_cmd->add_flag("--json", f.json);
  bad_cmd->add_option("--set", bad_spec, "Comma separated vertex ids to test");

  auto* cut_cmd = app.add_subcommand("cut", "Cut along an edge and fill both sides");
  cut_cmd->add_option("file", f.file)->required();
  cut_cmd->add_option("--edge", edge_spec, "v,w")->required();
  cut_cmd->add_flag("--json", f.json);

  auto* cert_cmd = app.add_subcommand("certificate", "Build a left-orderability certificate (JSON)");
  cert_cmd->add_option("file", f.file)->required();
  cert_cmd->add_option("--out", cert_out, "Write to a file instead of stdout");
  cert_cmd->add_flag("--minimize", minimize_first, "Blow down (-1)-vertices first");

  auto* check_cmd = app.add_subcommand("check-certificate", "Re-verify a certificate");
  check_cmd->add_option("file", f.file)->required();
  check_cmd->add_flag("--json", f.json);

  auto* seifert_cmd = app.add_subcommand("seifert", "Seifert invariants and the three star criteria");
  seifert_cmd->add_option("file", f.file)->required();
  seifert_cmd->add_flag("--json", f.json);

  auto* brieskorn_cmd = app.add_subcommand("brieskorn", "Plumbing graph of Sigma(p,q,r)");
  brieskorn_cmd->add_option("p", p)->required();
  brieskorn_cmd->add_option("q", q)->required();
  brieskorn_cmd->add_option("r", r)->required();
  brieskorn_cmd->add_flag("--json", f.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*classify_cmd) {
      auto g = load_graph(f.file);
      auto rep = classify(g, {with_badset, badset_cap});
      if (!cert_out.empty() && rep.rational == false) {
        write_text(cert_out, to_json(lo_certificate(minimize(g))).dump(2) + "\n");
        rep.certificate_path = cert_out;
      }
      if (f.json) {
        auto j = to_json(rep);
        if (debug_form) j["form"] = form_json(g);
        std::cout << j.dump(2) << "\n";
      } else {
        print_report(rep);
        if (debug_form) std::cout << form_json(g).dump() << "\n";
      }
    } else if (*census_cmd) {
      CensusOptions opts{max_vertices, min_weight, minimal_only, false};
      auto records = census(opts, {with_badset, badset_cap}, jobs);
      std::ostream* out = &std::cout;
      std::ofstream file;
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        file.open(fs::path(out_dir) / "census.jsonl");
        if (!file) throw InputError("cannot write into '" + out_dir + "'");
        out = &file;
      }
      std::size_t rational = 0;
      for (const auto& rec : records) {
        json j = {{"graph", rec.graph_text},
                  {"vertices", rec.vertices},
                  {"report", to_json(rec.report)},
                  {"seconds", rec.seconds}};
        *out << j.dump() << "\n";
        rational += rec.report.rational.value_or(false) ? 1 : 0;
      }
      std::cerr << records.size() << " graphs, " << rational << " rational\n";
    } else if (*zmin_cmd) {
      auto g = load_graph(f.file);
      auto v = is_rational(g);
      if (f.json) {
        json j = {{"z_min", cycle_json(v.z_min)}, {"chi", to_string(v.chi_zmin)}, {"rational", v.rational}};
        if (v.jump) j["jump"] = {{"step", v.jump->step}, {"vertex", v.jump->vertex}, {"pairing", v.jump->pairing}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "Z_min       " << cycle_string(v.z_min) << "\n"
                  << "chi(Z_min)  " << to_string(v.chi_zmin) << "\n"
                  << "rational    " << (v.rational ? "yes" : "no") << "\n";
        if (v.jump)
          std::cout << "first jump  step " << v.jump->step << " at " << v.jump->vertex << ", pairing "
                    << v.jump->pairing << "\n";
      }
    } else if (*seq_cmd) {
      auto g = load_graph(f.file);
      auto z = z_min(g, TieBreak{seed});
      if (f.json)
        std::cout << to_json(z.sequence).dump(2) << "\n";
      else
        print_sequence(g, z.sequence);
    } else if (*bad_cmd) {
      auto g = load_graph(f.file);
      if (!bad_spec.empty()) {
        std::set<VertexId> s;
        std::stringstream ss(bad_spec);
        for (std::string id; std::getline(ss, id, ',');)
          if (!id.empty()) s.insert(id);
        for (const auto& v : s)
          if (!g.contains(v)) throw InputError("unknown vertex '" + v + "'");
        bool bad = is_bad_set(g, s);
        if (f.json)
          std::cout << json{{"set", std::vector<VertexId>(s.begin(), s.end())}, {"bad", bad}}.dump(2) << "\n";
        else
          std::cout << set_string(s) << (bad ? " is" : " is not") << " a bad set\n";
      } else {
        auto res = min_bad(g);
        if (f.json) {
          std::cout << json{{"m", res.m},
                            {"bad_set", std::vector<VertexId>(res.witness.begin(), res.witness.end())},
                            {"witness_has_non_node", res.witness_has_non_node}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << "m(G) = " << res.m << ", witness " << set_string(res.witness) << "\n";
          if (res.witness_has_non_node) std::cout << "note: the witness contains a vertex of valency < 3\n";
        }
      }
    } else if (*cut_cmd) {
      auto g = load_graph(f.file);
      auto comma = edge_spec.find(',');
      if (comma == std::string::npos) throw InputError("--edge expects v,w");
      auto res = cut_and_fill(g, edge_spec.substr(0, comma), edge_spec.substr(comma + 1));
      if (f.json) {
        std::cout << json{{"edge", {res.v, res.w}},
                          {"r", to_string(res.r)},
                          {"side_v", serialize(res.side_v)},
                          {"side_w", serialize(res.side_w)},
                          {"filled_v", serialize(res.filled_v)},
                          {"filled_w", serialize(res.filled_w)},
                          {"det_filled_v", to_string(determinant(res.filled_v))},
                          {"det_filled_w", to_string(determinant(res.filled_w))}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "r = " << to_string(res.r) << ", 1/r = " << to_string(Rational(1) / res.r) << "\n"
                  << "# filled v-side, det " << to_string(determinant(res.filled_v)) << "\n"
                  << serialize(res.filled_v) << "# filled w-side, det " << to_string(determinant(res.filled_w))
                  << "\n"
                  << serialize(res.filled_w);
      }
    } else if (*cert_cmd) {
      auto g = load_graph(f.file);
      if (minimize_first) g = minimize(g);
      auto text = to_json(lo_certificate(g)).dump(2) + "\n";
      if (cert_out.empty())
        std::cout << text;
      else
        write_text(cert_out, text);
    } else if (*check_cmd) {
      json j;
      try {
        j = json::parse(read_text(f.file));
      } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
      }
      auto res = check_certificate(certificate_from_json(j));
      if (f.json)
        std::cout << json{{"ok", res.ok}, {"path", res.path}, {"message", res.message}}.dump(2) << "\n";
      else if (res.ok)
        std::cout << "certificate OK\n";
      else
        std::cout << "certificate REJECTED at " << res.path << ": " << res.message << "\n";
      return res.ok ? 0 : 1;
    } else if (*seifert_cmd) {
      auto g = minimize(load_graph(f.file));
      auto sd = star_to_seifert(g);
      validate(sd);
      auto e = orbifold_euler(sd);
      if (e >= 0) throw InputError("orbifold Euler number " + to_string(e) + " >= 0; not negative definite");
      auto pink = pinkham_nonrational(sd);
      bool rational = laufer_rational(g);
      std::optional<FoliationVerdict> fol;
      if (sd.nu() == 3) fol = foliation_criterion(sd);
      if (f.json) {
        json j = seifert_json(sd);
        j["e"] = to_string(e);
        j["pinkham_nonrational"] = pink.nonrational;
        j["pinkham_witness"] = pink.witness ? json(pink.witness->str()) : json(nullptr);
        j["foliation"] = fol ? json(fol->foliation) : json(nullptr);
        j["rational"] = rational;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_string(sd) << "\n"
                  << "e = " << to_string(e) << "\n"
                  << "Pinkham: " << (pink.nonrational ? "non-rational, l = " + pink.witness->str() : "rational")
                  << " (scanned l <= " << pink.bound.str() << ")\n";
        if (fol) {
          std::cout << "foliation criterion: " << (fol->foliation ? "yes" : "no");
          if (fol->witness) std::cout << " (m, a) = (" << fol->witness->m.str() << ", " << fol->witness->a.str() << ")";
          std::cout << "\n";
        }
        std::cout << "Laufer: " << (rational ? "rational" : "non-rational") << "\n";
      }
    } else if (*brieskorn_cmd) {
      auto sd = brieskorn_seifert(p, q, r);
      auto g = seifert_to_graph(sd);
      auto rep = classify(g);
      if (f.json) {
        json j = to_json(rep);
        j["graph"] = serialize(g);
        j["seifert"] = seifert_json(sd);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "# Sigma(" << p << "," << q << "," << r << "): " << to_string(sd) << "\n" << serialize(g);
        print_report(rep);
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
