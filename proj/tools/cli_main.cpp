// Command-line front end: exact nilpotent-orbit combinatorics, pyramid
// gradings, Slodowy slices, reduction stages and the sl4 Poisson fixture.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

#include "slodowy/slodowy.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace slodowy;

namespace {

Partition parse_partition_arg(const std::string& text)
{
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition '" + text + "': expected comma-separated integers");
    }
  }
  if (parts.empty()) throw std::invalid_argument("bad partition: empty");
  Partition p(parts);
  if (p.parts() != parts)
    std::cerr << "note: partition " << text << " re-sorted to " << p.to_string() << "\n";
  return p;
}

std::string dot_id(const Partition& p) { return "p" + p.to_string(); }

std::string hasse_dot(int n, const Hasse& h)
{
  std::string out;
  out += "// Dominance order on partitions of " + std::to_string(n) + ".\n";
  out += "// Edges point from the covered partition to the covering one.\n";
  out += "digraph hasse" + std::to_string(n) + " {\n";
  out += "  rankdir=BT;\n";
  for (const auto& p : h.nodes)
    out += "  \"" + dot_id(p) + "\" [label=\"" + p.to_string() + "\"];\n";
  for (const auto& [a, b] : h.edges)
    out += "  \"" + dot_id(h.nodes[a]) + "\" -> \"" + dot_id(h.nodes[b]) + "\";\n";
  out += "}\n";
  return out;
}

Json hasse_json(int n, const Hasse& h)
{
  Json j;
  j["n"] = n;
  j["nodes"] = Json::array();
  for (const auto& p : h.nodes) j["nodes"].push_back(partition_to_json(p));
  j["edges"] = Json::array();
  for (const auto& [a, b] : h.edges) j["edges"].push_back(Json::array({a, b}));
  return j;
}

std::string degree_matrix_text(const Grading& g)
{
  std::string out;
  for (const auto& row : g.degree_matrix()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += " ";
      out += std::to_string(row[j]);
    }
    out += "\n";
  }
  return out;
}

std::string join_ints(const std::vector<int>& v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path)
{
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file " + out_path);
  f << text;
}

Pyramid pyramid_by_index(const Partition& shape, std::size_t index)
{
  const auto all = enumerate_pyramids(shape);
  if (index >= all.size())
    throw std::invalid_argument("pyramid index " + std::to_string(index) + " out of range (" +
                                std::to_string(all.size()) + " pyramids)");
  return all[index];
}

struct FixtureReport {
  bool slice_table_ok = false;
  bool reduced_table_ok = false;
  bool uv_corrected_ok = false;
  bool phi_tables_ok = false;
  bool phi_transport_ok = false;
  bool canonicalize_ok = false;
  Polynomial df_defect;
  bool ok() const
  {
    return slice_table_ok && reduced_table_ok && uv_corrected_ok && phi_tables_ok &&
           phi_transport_ok && canonicalize_ok;
  }
};

// The tables are normalised differently from the engine's trace-form
// convention; one global scalar, fixed once on {a,d}, must reconcile every
// entry.  The tabulated {u,v} is the known exception: the engine agrees with
// the corrected entry -1/4 (z + 2xy + (u+v)y) instead.
FixtureReport verify_fixture(const Sl4Fixture& fx, unsigned seed)
{
  FixtureReport rep;
  const Rational sigma(8);
  Rng rng(seed);

  {
    const auto& cs = fx.slice_chart;
    const auto& names = cs.chart->names;
    bool ok = true;
    for (std::size_t i = 0; i < names.size() && ok; ++i)
      for (std::size_t j = i + 1; j < names.size() && ok; ++j) {
        const auto eng = dirac_bracket_poly(cs, Polynomial::variable(cs.chart, i),
                                            Polynomial::variable(cs.chart, j), rng);
        ok = (eng == Polynomial(sigma) * fx.slice_table.of(names[i], names[j]));
      }
    rep.slice_table_ok = ok;
  }

  {
    const auto& sc = fx.reduced_chart;
    const auto& names = sc.chart->names;
    const auto var = [&](const std::string& nm) { return Polynomial::variable(sc.chart, nm); };
    const Polynomial corrected = Polynomial(Rational(-1, 4)) *
                                 (var("z") + Polynomial(2) * var("x") * var("y") +
                                  (var("u") + var("v")) * var("y"));
    bool others = true, corr = true;
    for (int t = 0; t < 3; ++t) {
      const auto w = rng.random_point(names.size());
      const Mat p = sc.section_at(w);
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) {
          const Rational eng = reduced_bracket_at(sc, var(names[i]), var(names[j]), p);
          if (names[i] == "u" && names[j] == "v") {
            corr = corr && (eng == sigma * corrected.eval<Rational>(w));
          } else {
            others = others &&
                     (eng == sigma * fx.reduced_table.of(names[i], names[j]).eval<Rational>(w));
          }
        }
    }
    rep.reduced_table_ok = others;
    rep.uv_corrected_ok = corr;
  }

  {
    const auto& snames = fx.slice_chart.chart->names;
    const auto rring = fx.reduced_chart.chart;
    const auto var = [&](const std::string& nm) { return Polynomial::variable(rring, nm); };
    const Polynomial defect =
        Polynomial(Rational(1, 4)) * var("y") * (var("x") - var("u") - var("v"));
    bool ok = true;
    for (std::size_t i = 0; i < snames.size() && ok; ++i)
      for (std::size_t j = i + 1; j < snames.size() && ok; ++j) {
        const Polynomial lhs = fx.slice_table.of(snames[i], snames[j]).substitute(fx.phi);
        const Polynomial rhs = table_bracket(fx.reduced_table, fx.phi[i], fx.phi[j]);
        if (snames[i] == "d" && snames[j] == "f") {
          ok = (rhs - lhs == defect);
          rep.df_defect = rhs - lhs;
        } else {
          ok = (lhs == rhs);
        }
      }
    rep.phi_tables_ok = ok;
  }

  {
    const auto& sc = fx.reduced_chart;
    const auto& cs = fx.slice_chart;
    const auto sl = make_span(4, sl_basis(4));
    const auto img =
        image_of_operator([&cs](const Mat& x) { return bracket(cs.triple.f, x); }, sl);
    const auto rvar = [&](const char* nm) {
      return Polynomial::variable(sc.chart, std::string(nm));
    };
    const char* pairs[5][2] = {{"u", "y"}, {"v", "y"}, {"u", "z"}, {"v", "z"}, {"u", "v"}};
    bool ok = true;
    for (int t = 0; t < 5 && ok; ++t) {
      const auto w = rng.random_point(5);
      const Mat p = sc.section_at(w);
      std::vector<Rational> a(cs.chart->size());
      for (std::size_t s = 0; s < a.size(); ++s) a[s] = fx.phi[s].eval<Rational>(w);
      const auto ctx = make_dirac(img.basis, cs.section_at(a));
      if (!ctx) {
        ok = false;
        break;
      }
      for (const auto& pr : pairs) {
        const Rational lhs = reduced_bracket_at(sc, rvar(pr[0]), rvar(pr[1]), p);
        const Polynomial fs = cs.to_ambient(fx.phi_inverse[sc.chart->index.at(pr[0])]);
        const Polynomial gs = cs.to_ambient(fx.phi_inverse[sc.chart->index.at(pr[1])]);
        ok = ok && (lhs == dirac_bracket_at(*ctx, fs, gs));
      }
    }
    rep.phi_transport_ok = ok;
  }

  {
    const auto& sc = fx.reduced_chart;
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const auto w = rng.random_point(sc.chart->size());
      const Mat s = sc.section_at(w);
      Mat x(4, 4);
      for (const auto& b : sc.m2.basis) x += b * rng.small_rational();
      const Mat grp = Mat::identity(4) + x;
      const auto gi = inverse(grp);
      if (!gi) {
        ok = false;
        break;
      }
      const auto can = canonicalize<Rational>(sc, grp * s * *gi, /*strict=*/true);
      ok = (can.coords == w) && (can.canonical == s);
    }
    rep.canonicalize_ok = ok;
  }

  return rep;
}

int cmd_hasse(int n, const std::string& format, const std::string& out_path)
{
  const auto h = hasse(n);
  if (format == "json") {
    emit(hasse_json(n, h).dump(2) + "\n", out_path);
  } else {
    emit(hasse_dot(n, h), out_path);
  }
  return 0;
}

int cmd_pyramids(const Partition& shape, int index, const std::string& format,
                 const std::string& out_path)
{
  const auto all = enumerate_pyramids(shape);
  if (format == "json") {
    Json j = Json::array();
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (index >= 0 && static_cast<std::size_t>(index) != k) continue;
      Json e;
      e["index"] = k;
      e["shape"] = partition_to_json(shape);
      e["offsets"] = all[k].offsets;
      e["even"] = is_even(all[k]);
      e["symmetric"] = is_symmetric(all[k]);
      j.push_back(e);
    }
    emit(j.dump(2) + "\n", out_path);
    return 0;
  }
  std::string text;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (index >= 0 && static_cast<std::size_t>(index) != k) continue;
    text += "pyramid " + std::to_string(k) + " of " + shape.to_string() + " (offsets " +
            join_ints(all[k].offsets) + ")";
    text += is_even(all[k]) ? ", even" : "";
    text += is_symmetric(all[k]) ? ", symmetric" : "";
    text += "\n";
    text += render_ascii(canonical_filling(all[k]));
    text += "\n";
  }
  emit(text, out_path);
  return 0;
}

int cmd_grading(const Partition& shape, int index, const std::string& format,
                const std::string& out_path)
{
  const auto p = pyramid_by_index(shape, static_cast<std::size_t>(index < 0 ? 0 : index));
  const auto fl = canonical_filling(p);
  const auto [e, g] = nilpotent_and_grading(fl);
  const auto rep = check_good_grading(e, g);

  if (format == "json") {
    Json j;
    j["shape"] = partition_to_json(shape);
    j["offsets"] = p.offsets;
    j["h_gamma"] = mat_to_json(g.h_gamma());
    j["degree_matrix"] = g.degree_matrix();
    j["characteristic"] = characteristic(g);
    j["good"] = rep.good();
    emit(j.dump(2) + "\n", out_path);
    return 0;
  }
  std::string text;
  text += "pyramid grading for " + shape.to_string() + " (offsets " + join_ints(p.offsets) + ")\n";
  text += "h_gamma = " + to_string(g.h_gamma()) + "\n";
  text += "degree matrix:\n" + degree_matrix_text(g);
  text += "characteristic: " + join_ints(characteristic(g)) + "\n";
  text += std::string("good grading: ") + (rep.good() ? "yes" : "no") + "\n";
  emit(text, out_path);
  return 0;
}

int cmd_triple(const Partition& shape, bool graded, int index, const std::string& format,
               const std::string& out_path)
{
  Sl2Triple t;
  if (graded) {
    const auto p = pyramid_by_index(shape, static_cast<std::size_t>(index < 0 ? 0 : index));
    t = graded_triple(canonical_filling(p));
  } else {
    t = jordan_triple(shape);
  }
  require_sl2_relations(t, "cli triple");

  if (format == "json") {
    Json j;
    j["shape"] = partition_to_json(shape);
    j["construction"] = graded ? "graded" : "jordan";
    j["e"] = mat_to_json(t.e);
    j["h"] = mat_to_json(t.h);
    j["f"] = mat_to_json(t.f);
    emit(j.dump(2) + "\n", out_path);
    return 0;
  }
  std::string text;
  text += "sl2 triple for " + shape.to_string() + (graded ? " (graded)" : " (jordan)") + "\n";
  text += "e = " + to_string(t.e) + "\n";
  text += "h = " + to_string(t.h) + "\n";
  text += "f = " + to_string(t.f) + "\n";
  emit(text, out_path);
  return 0;
}

int cmd_slice(const Partition& shape, const std::string& format, const std::string& out_path)
{
  const auto t = jordan_triple(shape);
  const auto rep = slice_checks(t);
  const auto cs = linear_chart(t);

  if (format == "json") {
    Json j;
    j["shape"] = partition_to_json(shape);
    j["dim"] = rep.chart.zf.dim();
    Json ws = Json::object();
    for (const auto& [w, span] : rep.weight_spaces) ws[std::to_string(w)] = span.dim();
    j["ad_h_weights"] = ws;
    j["kazhdan_weights"] = cs.weights;
    j["transversal"] = rep.transversal;
    j["graded"] = rep.graded;
    j["contracting"] = rep.contracting;
    emit(j.dump(2) + "\n", out_path);
    return rep.ok() ? 0 : 1;
  }
  std::string text;
  text += "Slodowy slice for " + shape.to_string() + "\n";
  text += "dim z(f) = " + std::to_string(rep.chart.zf.dim()) + "\n";
  text += "ad-h weights:";
  for (const auto& [w, span] : rep.weight_spaces)
    text += " " + std::to_string(w) + "(x" + std::to_string(span.dim()) + ")";
  text += "\n";
  text += "kazhdan weights: " + join_ints(cs.weights) + "\n";
  text += std::string("transversal: ") + (rep.transversal ? "yes" : "no") + "\n";
  text += std::string("graded: ") + (rep.graded ? "yes" : "no") + "\n";
  text += std::string("contracting: ") + (rep.contracting ? "yes" : "no") + "\n";
  emit(text, out_path);
  return rep.ok() ? 0 : 1;
}

int cmd_check(const Partition& shape, int index, const std::string& out_path)
{
  const auto p = pyramid_by_index(shape, static_cast<std::size_t>(index < 0 ? 0 : index));
  const auto fl = canonical_filling(p);
  const auto [e, g] = nilpotent_and_grading(fl);
  const auto rep = check_good_grading(e, g);
  std::string text;
  const auto line = [&text](const char* name, bool ok) {
    text += std::string(ok ? "ok  " : "FAIL") + "  " + name + "\n";
  };
  line("degree-two nilpotent", rep.gg1);
  line("injective below", rep.gg2);
  line("surjective above", rep.gg3);
  line("centralizer nonnegative", rep.gg4);
  line("paired degrees", rep.gg5);
  line("dimension count", rep.gg6);
  emit(text, out_path);
  return rep.good() ? 0 : 1;
}

int cmd_stages(const Partition& lambda, const Partition& mu, bool verify,
               const std::string& format, const std::string& out_path)
{
  const auto rd = stage_data(lambda, mu);
  SrReport sr;
  PremetConditions pc;
  bool strings_ok = false;
  if (verify) {
    sr = verify_sr(rd);
    pc = premet_conditions(rd.e2, rd.m2);
    strings_ok = verify_jordan_strings(rd, jordan_strings(rd));
  }

  if (format == "json") {
    Json j;
    j["lambda"] = partition_to_json(rd.lambda);
    j["mu"] = partition_to_json(rd.mu);
    j["witness"] = Json::array({rd.witness.i, rd.witness.j});
    j["e1"] = mat_to_json(rd.e1);
    j["e2"] = mat_to_json(rd.e2);
    j["dim_m1"] = rd.m1.dim();
    j["dim_m2"] = rd.m2.dim();
    j["dim_k"] = rd.k.dim();
    if (verify) {
      j["sr1"] = sr.sr1_ideal && sr.sr1_subalgebra && sr.sr1_abelian && sr.sr1_direct;
      j["sr2"] = sr.sr2_iso && sr.sr2_match;
      j["sr3"] = sr.sr3_chi1 && sr.sr3_chi2;
      j["sr4"] = sr.sr4_surjective;
      j["premet"] = pc.ok();
      j["jordan_strings"] = strings_ok;
    }
    emit(j.dump(2) + "\n", out_path);
    return (!verify || (sr.ok() && pc.ok() && strings_ok)) ? 0 : 1;
  }

  std::string text;
  text += "reduction stage " + rd.lambda.to_string() + " over " + rd.mu.to_string() +
          " (witness rows " + std::to_string(rd.witness.i) + "," + std::to_string(rd.witness.j) +
          ")\n";
  text += "e1 = " + to_string(rd.e1) + "\n";
  text += "e2 = " + to_string(rd.e2) + "\n";
  text += "dim m1 = " + std::to_string(rd.m1.dim()) + ", dim m2 = " + std::to_string(rd.m2.dim()) +
          ", dim k = " + std::to_string(rd.k.dim()) + "\n";
  if (verify) {
    const auto line = [&text](const char* name, bool ok) {
      text += std::string(ok ? "ok  " : "FAIL") + "  " + name + "\n";
    };
    line("SR1 ideal", sr.sr1_ideal);
    line("SR1 subalgebra", sr.sr1_subalgebra);
    line("SR1 abelian", sr.sr1_abelian);
    line("SR1 direct sum", sr.sr1_direct);
    line("SR2 character isomorphism", sr.sr2_iso);
    line("SR2 character match", sr.sr2_match);
    line("SR3 chi1 vanishes", sr.sr3_chi1);
    line("SR3 chi2 vanishes", sr.sr3_chi2);
    line("SR4 pairing surjective", sr.sr4_surjective);
    line("Premet conditions", pc.ok());
    line("Jordan strings", strings_ok);
  }
  emit(text, out_path);
  return (!verify || (sr.ok() && pc.ok() && strings_ok)) ? 0 : 1;
}

int cmd_poisson(const std::string& data_path, unsigned seed, const std::string& format,
                const std::string& out_path)
{
  const auto fx = data_path.empty() ? load_sl4_fixture() : load_sl4_fixture(data_path);
  const auto rep = verify_fixture(fx, seed);

  if (format == "json") {
    Json j;
    j["slice_table"] = rep.slice_table_ok;
    j["reduced_table"] = rep.reduced_table_ok;
    j["uv_corrected"] = rep.uv_corrected_ok;
    j["phi_tables"] = rep.phi_tables_ok;
    j["phi_transport"] = rep.phi_transport_ok;
    j["canonicalize"] = rep.canonicalize_ok;
    j["df_defect"] = rep.df_defect.str();
    emit(j.dump(2) + "\n", out_path);
    return rep.ok() ? 0 : 1;
  }
  std::string text;
  const auto line = [&text](const char* name, bool ok) {
    text += std::string(ok ? "ok  " : "FAIL") + "  " + name + "\n";
  };
  line("slice bracket table (one global scalar)", rep.slice_table_ok);
  line("reduced bracket table away from {u,v}", rep.reduced_table_ok);
  line("corrected {u,v} entry", rep.uv_corrected_ok);
  line("phi intertwines tables away from {d,f}", rep.phi_tables_ok);
  line("phi transports point brackets", rep.phi_transport_ok);
  line("canonicalisation round trips", rep.canonicalize_ok);
  text += "tabulated {d,f} defect: " + rep.df_defect.str() + "\n";
  emit(text, out_path);
  return rep.ok() ? 0 : 1;
}

int cmd_verify_all(int max_n, unsigned seed, const std::string& out_path)
{
  std::string text;
  bool all_ok = true;
  const auto line = [&](const char* name, bool ok) {
    text += std::string(ok ? "ok  " : "FAIL") + "  " + name + "\n";
    all_ok = all_ok && ok;
  };

  {
    bool ok = true;
    for (int n = 2; n <= max_n && ok; ++n) {
      const auto all = partitions_of(n);
      for (const auto& la : all)
        for (const auto& mu : all) {
          if (la == mu) continue;
          bool brute = dominates(la, mu);
          if (brute)
            for (const auto& nu : all)
              if (nu != la && nu != mu && dominates(la, nu) && dominates(nu, mu)) brute = false;
          ok = ok && (covers(la, mu).has_value() == brute);
        }
    }
    line("cover relation matches transitive reduction", ok);
  }

  {
    bool ok = true;
    for (int n = 2; n <= max_n && ok; ++n)
      for (const auto& la : partitions_of(n))
        for (const auto& p : enumerate_pyramids(la)) {
          const auto fl = canonical_filling(p);
          const auto [e, g] = nilpotent_and_grading(fl);
          ok = ok && check_good_grading(e, g).good() && jordan_type(e) == la;
          const auto cb = centralizer_basis(fl);
          int dual_sq = 0;
          const auto dual = dual_partition(la);
          for (std::size_t i = 0; i < dual.size(); ++i) dual_sq += dual[i] * dual[i];
          ok = ok && cb.size() == static_cast<std::size_t>(dual_sq);
          for (const auto& z : cb) ok = ok && bracket(e, z).is_zero();
          ok = ok && make_span(fl.n, cb).dim() == cb.size();
        }
    line("pyramid gradings are good; centralizers have the right size", ok);
  }

  {
    bool ok = true;
    for (int n = 2; n <= max_n && ok; ++n)
      for (const auto& la : partitions_of(n)) {
        const auto t = jordan_triple(la);
        try {
          require_sl2_relations(t, "verify-all");
        } catch (const std::exception&) {
          ok = false;
        }
        const auto rep = slice_checks(t);
        ok = ok && rep.ok();
        for (const auto& p : enumerate_pyramids(la)) {
          const auto fl = canonical_filling(p);
          try {
            require_sl2_relations(graded_triple(fl), "verify-all");
            const auto pd = premet(fl);
            ok = ok && chi_vanishes_on_brackets(pd);
          } catch (const std::exception&) {
            ok = false;
          }
        }
      }
    line("sl2 triples, slices and Premet subalgebras", ok);
  }

  {
    bool ok = true;
    for (int n = 2; n <= max_n && ok; ++n)
      for (const auto& la : partitions_of(n))
        for (const auto& mu : partitions_of(n)) {
          if (!covers(la, mu).has_value()) continue;
          const auto rd = stage_data(la, mu);
          ok = ok && jordan_type(rd.e2) == la;
          ok = ok && verify_sr(rd).ok();
          ok = ok && premet_conditions(rd.e2, rd.m2).ok();
          ok = ok && verify_jordan_strings(rd, jordan_strings(rd));
        }
    line("reduction stages satisfy SR1-SR4 with Jordan strings", ok);
  }

  {
    bool ok = true;
    try {
      const auto fx = load_sl4_fixture();
      ok = verify_fixture(fx, seed).ok();
    } catch (const std::exception&) {
      ok = false;
    }
    line("sl4 fixture cross-checks", ok);
  }

  emit(text, out_path);
  return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exact Slodowy slice and reduction-by-stages toolkit"};
  app.require_subcommand(1);

  // hasse
  int hasse_n = 4;
  std::string hasse_format = "dot", hasse_out;
  auto* hasse_cmd = app.add_subcommand("hasse", "dominance order Hasse diagram");
  hasse_cmd->add_option("--n", hasse_n, "partitions of n")->required()->check(CLI::Range(1, 24));
  hasse_cmd->add_option("--format", hasse_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  hasse_cmd->add_option("--out", hasse_out, "write to file instead of stdout");

  // pyramids
  std::string pyr_shape, pyr_format = "ascii", pyr_out;
  int pyr_index = -1;
  auto* pyr_cmd = app.add_subcommand("pyramids", "enumerate pyramids of a shape");
  pyr_cmd->add_option("--shape", pyr_shape, "partition, e.g. 3,2,2")->required();
  pyr_cmd->add_option("--index", pyr_index, "select a single pyramid");
  pyr_cmd->add_option("--format", pyr_format, "ascii or json")
      ->check(CLI::IsMember({"ascii", "json"}));
  pyr_cmd->add_option("--out", pyr_out, "write to file instead of stdout");

  // grading
  std::string grad_shape, grad_format = "text", grad_out;
  int grad_index = 0;
  auto* grad_cmd = app.add_subcommand("grading", "pyramid grading data");
  grad_cmd->add_option("--shape", grad_shape, "partition")->required();
  grad_cmd->add_option("--index", grad_index, "pyramid index (default right-aligned)");
  grad_cmd->add_option("--format", grad_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  grad_cmd->add_option("--out", grad_out, "write to file instead of stdout");

  // triple
  std::string tri_shape, tri_format = "text", tri_out;
  bool tri_graded = false;
  int tri_index = 0;
  auto* tri_cmd = app.add_subcommand("triple", "sl2 triple through a nilpotent");
  tri_cmd->add_option("--shape", tri_shape, "partition")->required();
  tri_cmd->add_flag("--graded", tri_graded, "use the pyramid construction");
  tri_cmd->add_option("--index", tri_index, "pyramid index for --graded");
  tri_cmd->add_option("--format", tri_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  tri_cmd->add_option("--out", tri_out, "write to file instead of stdout");

  // slice
  std::string slice_shape, slice_format = "text", slice_out;
  auto* slice_cmd = app.add_subcommand("slice", "Slodowy slice structure");
  slice_cmd->add_option("--shape", slice_shape, "partition")->required();
  slice_cmd->add_option("--format", slice_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  slice_cmd->add_option("--out", slice_out, "write to file instead of stdout");

  // check
  std::string check_shape, check_out;
  int check_index = 0;
  auto* check_cmd = app.add_subcommand("check", "good-grading conditions for a pyramid");
  check_cmd->add_option("--shape", check_shape, "partition")->required();
  check_cmd->add_option("--index", check_index, "pyramid index");
  check_cmd->add_option("--out", check_out, "write to file instead of stdout");

  // stages
  std::string st_lambda, st_mu, st_format = "text", st_out;
  bool st_verify = false;
  auto* st_cmd = app.add_subcommand("stages", "reduction stage for an adjacent pair");
  st_cmd->add_option("--lambda", st_lambda, "larger partition")->required();
  st_cmd->add_option("--mu", st_mu, "covered partition")->required();
  st_cmd->add_flag("--verify", st_verify, "run the SR checks");
  st_cmd->add_option("--format", st_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  st_cmd->add_option("--out", st_out, "write to file instead of stdout");

  // poisson
  std::string po_data, po_format = "text", po_out;
  unsigned po_seed = 20240801;
  auto* po_cmd = app.add_subcommand("poisson", "verify the sl4 bracket fixture");
  po_cmd->add_option("--data", po_data, "fixture path (default built-in)");
  po_cmd->add_option("--seed", po_seed, "sampling seed");
  po_cmd->add_option("--format", po_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  po_cmd->add_option("--out", po_out, "write to file instead of stdout");

  // verify-all
  int va_max_n = 6;
  unsigned va_seed = 20240801;
  std::string va_out;
  auto* va_cmd = app.add_subcommand("verify-all", "run every structural check");
  va_cmd->add_option("--max-n", va_max_n, "largest matrix size for the sweeps")
      ->check(CLI::Range(2, 9));
  va_cmd->add_option("--seed", va_seed, "sampling seed");
  va_cmd->add_option("--out", va_out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*hasse_cmd) return cmd_hasse(hasse_n, hasse_format, hasse_out);
    if (*pyr_cmd) return cmd_pyramids(parse_partition_arg(pyr_shape), pyr_index, pyr_format, pyr_out);
    if (*grad_cmd)
      return cmd_grading(parse_partition_arg(grad_shape), grad_index, grad_format, grad_out);
    if (*tri_cmd)
      return cmd_triple(parse_partition_arg(tri_shape), tri_graded, tri_index, tri_format, tri_out);
    if (*slice_cmd) return cmd_slice(parse_partition_arg(slice_shape), slice_format, slice_out);
    if (*check_cmd) return cmd_check(parse_partition_arg(check_shape), check_index, check_out);
    if (*st_cmd)
      return cmd_stages(parse_partition_arg(st_lambda), parse_partition_arg(st_mu), st_verify,
                        st_format, st_out);
    if (*po_cmd) return cmd_poisson(po_data, po_seed, po_format, po_out);
    if (*va_cmd) return cmd_verify_all(va_max_n, va_seed, va_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
