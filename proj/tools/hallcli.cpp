// hallcli: command-line front end for the Hall algebra engine.

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hall/cache.hpp"
#include "hall/fourier.hpp"
#include "hall/hallcore.hpp"
#include "hall/primitives.hpp"
#include "hall/suite.hpp"

using namespace hall;
using nlohmann::json;

namespace {

struct Config {
  std::string quiver = "c1";
  long q = 2;
  bool symbolic = false;
  int r = 0;
  int n = 1;
  int m = 1;
  std::string d;
  std::string cache_dir;
  std::string format = "table";
  int jobs = 1;
  bool all = false;
  bool timing = false;
  std::string anchor = "0";
  std::string kind;
  std::string check;
  std::string L, M, N;
};

class Usage : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// c1, cr:r (or cr with --r), k2, a2, c2full
std::shared_ptr<const Engine> make_engine(const Config& c) {
  if (c.q < 2) throw Usage("--q must be a prime power >= 2");
  if (c.quiver == "c1") return std::make_shared<NilpotentCyclicEngine>(1, c.q);
  if (c.quiver.rfind("cr", 0) == 0) {
    int r = c.r;
    if (c.quiver.size() > 2) {
      if (c.quiver[2] != ':') throw Usage("quiver must be cr:<r>");
      r = std::stoi(c.quiver.substr(3));
    }
    if (r < 1) throw Usage("cr needs r >= 1 (cr:<r> or --r)");
    return std::make_shared<NilpotentCyclicEngine>(r, c.q);
  }
  if (c.quiver == "k2") return full_engine(Quiver::kronecker(), c.q);
  if (c.quiver == "a2") return full_engine(Quiver::a2(), c.q);
  if (c.quiver == "c2full") return full_engine(Quiver::cyclic(2), c.q);
  throw Usage("unknown quiver '" + c.quiver + "' (c1, cr:r, k2, a2, c2full)");
}

NilEngine nil_engine(const Config& c) {
  auto e = std::dynamic_pointer_cast<const NilpotentCyclicEngine>(make_engine(c));
  if (!e) throw Usage("this command needs a nilpotent cyclic quiver (c1 or cr:r)");
  return e;
}

Multisegment parse_segments(const std::string& text, int r) {
  if (!text.empty() && text.front() == '(') return partition_multisegment(Partition::parse(text), r);
  return parse_multisegment(text);
}

// Partitions "(2,1)" on cyclic engines, "d#i" shorthand or full keys on the others.
IsoClass parse_class(const Engine& e, const std::string& text) {
  if (auto nil = dynamic_cast<const NilpotentCyclicEngine*>(&e)) {
    if (!text.empty() && text.front() == '(') return nil->class_of(partition_multisegment(Partition::parse(text), nil->r()));
    return e.parse_class(text);
  }
  size_t hash = text.find('#');
  if (text.rfind("Q:", 0) != 0 && hash != std::string::npos)
    return e.parse_class("Q:" + e.id() + "|q:" + std::to_string(e.q()) + "|d:" +
                         dim_to_string(parse_dimvector(text.substr(0, hash))) + "|" + text.substr(hash));
  return e.parse_class(text);
}

DimVector grade(const Config& c, const Engine& e) {
  if (c.d.empty()) throw Usage("--d is required");
  DimVector d = parse_dimvector(c.d);
  if (d.size() != static_cast<size_t>(e.quiver().vertex_count()))
    throw Usage("--d must have one entry per vertex");
  return d;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> w;
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) {
      if (w.size() <= i) w.push_back(0);
      w[i] = std::max(w[i], row[i].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(w[i] - row[i].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
}

int cmd_isoclasses(const Config& c) {
  auto e = make_engine(c);
  DimVector d = grade(c, *e);
  json out = json::array();
  std::vector<std::vector<std::string>> rows{{"class", "aut", "end_dim", "indecomposable"}};
  for (const IsoClass& k : e->classes(d)) {
    std::string aut = e->aut_order(k).get_str();
    bool ind = e->is_indecomposable(k);
    out.push_back({{"class", e->render(k)}, {"aut", aut}, {"end_dim", e->end_dim(k)}, {"indecomposable", ind}});
    rows.push_back({e->render(k), aut, std::to_string(e->end_dim(k)), ind ? "yes" : "no"});
  }
  if (c.format == "json")
    std::cout << json{{"quiver", c.quiver}, {"q", c.q}, {"d", d}, {"classes", out}}.dump() << "\n";
  else
    print_table(rows);
  return 0;
}

int cmd_hallpoly(const Config& c) {
  auto e = nil_engine(c);
  Multisegment L = parse_segments(c.L, e->r()), M = parse_segments(c.M, e->r()), N = parse_segments(c.N, e->r());
  PolyQ f = hall_polynomial(e->r(), L, M, N);
  if (c.format == "json")
    std::cout << json{{"L", multisegment_to_string(L)}, {"M", multisegment_to_string(M)}, {"N", multisegment_to_string(N)},
                      {"F", f.to_string()}}.dump()
              << "\n";
  else
    std::cout << f.to_string() << "\n";
  return 0;
}

int cmd_hallnum(const Config& c) {
  if (c.symbolic) return cmd_hallpoly(c);
  auto e = make_engine(c);
  IsoClass L = parse_class(*e, c.L), M = parse_class(*e, c.M), N = parse_class(*e, c.N);
  long f = e->hall_number(L, M, N);
  if (c.format == "json")
    std::cout << json{{"L", e->render(L)}, {"M", e->render(M)}, {"N", e->render(N)}, {"q", c.q}, {"F", f}}.dump() << "\n";
  else
    std::cout << f << "\n";
  return 0;
}

template <class S>
void print_element(const Config& c, const std::string& name, const BasicHallElement<S>& x) {
  if (c.format == "json") {
    json j = x.to_json();
    j["element"] = name;
    std::cout << j.dump() << "\n";
    return;
  }
  std::vector<std::vector<std::string>> rows{{"class", "coeff"}};
  for (const auto& [k, v] : x.terms()) rows.push_back({x.engine().render(k), coeff_to_string(v)});
  std::cout << name << "\n";
  print_table(rows);
}

int cmd_primitive(const Config& c) {
  std::string kind = c.kind.empty() ? (c.quiver == "k2" ? "pK2" : "p") : c.kind;
  std::string tag = kind + "_" + std::to_string(c.n);
  if (kind == "solver") {
    auto e = make_engine(c);
    auto basis = primitive_subspace(e, grade(c, *e));
    for (size_t i = 0; i < basis.size(); ++i) print_element(c, "basis_" + std::to_string(i), basis[i]);
    return 0;
  }
  if (kind == "p0" || kind == "pinf" || kind == "pK2") {
    if (c.quiver != "k2") throw Usage("--kind " + kind + " needs --quiver k2");
    auto e = full_engine(Quiver::kronecker(), c.q);
    HallElement x = kind == "p0" ? kron_p0(e, c.n) : kind == "pinf" ? kron_pinf(e, c.n) : kron_pK2(e, c.n);
    print_element(c, tag, x);
    return 0;
  }
  auto e = nil_engine(c);
  if (kind == "p") {
    if (e->r() == 1 && c.symbolic) print_element(c, tag, p_jordan_symbolic(e, c.n));
    else print_element(c, tag, e->r() == 1 ? p_jordan(e, c.n) : p_cyclic(e, c.n));
  } else if (kind == "c") {
    print_element(c, tag, c_central(e, c.n));
  } else if (kind == "x") {
    print_element(c, tag, x_element(e, c.n));
  } else {
    throw Usage("unknown --kind '" + kind + "' (p, c, x, p0, pinf, pK2, solver)");
  }
  return 0;
}

VerificationReport run_named(const Config& c) {
  int r = c.r > 0 ? c.r : 1;
  const std::string& k = c.check;
  if (k == "xi") return verify_xi_identity(c.n);
  if (k == "partition_sums") return verify_partition_sum_identities(c.n);
  if (k == "aut") return aut_order_check(c.n, c.q);
  if (k == "key_pairing") return verify_key_pairing(r, c.n, c.q);
  if (k == "cyclic_coefficients") return verify_cyclic_coefficients(r, c.n, c.q);
  if (k == "central") return central_elements_check(r, c.n, c.q);
  if (k == "explicit_p1") return explicit_p1_check(c.q);
  if (k == "primitivity") return primitivity_suite({c.q});
  if (k == "primitive_kernel") return primitive_kernel_check(c.n, c.q);
  if (k == "tube_basis") return tube_basis_check(c.n, c.q, c.anchor);
  if (k == "glsum") return gl_character_check(c.n, c.q);
  if (k == "fourier_a2") return a2_image_check(c.q);
  if (k == "divided_power") return divided_power_check(c.n, c.q);
  if (k == "fourier_xi_route") return fourier_xi_route_check(c.n, c.q);
  if (k == "fourier_primitive") return kronecker_image_primitive(c.n, c.q);
  if (k == "homomorphism" || k == "double_transform") {
    DimVector bound = c.d.empty() ? DimVector{1, 1} : parse_dimvector(c.d);
    auto go = [&](const FourierTransform& phi) {
      return k == "homomorphism" ? check_homomorphism(phi, grade_pairs_up_to(bound)) : double_transform_check(phi, bound);
    };
    if (c.quiver == "a2") return go(a2_reversal(c.q));
    if (c.quiver == "k2") return go(kronecker_to_cyclic(c.q));
    throw Usage(k + " needs --quiver a2 or k2");
  }
  if (k == "axioms") return axioms_check(c.quiver == "cr:2" ? "c2nil" : c.quiver, c.q, c.m > 1 ? c.m : 5);
  throw Usage("unknown check '" + k + "'");
}

std::string report_line(const VerificationReport& rep, bool timing) {
  std::string s = rep.check + "  " + rep.params.dump() + "  " + (rep.pass ? "pass" : "FAIL") + "  " + rep.lhs;
  if (!rep.rhs.empty()) s += "  |  " + rep.rhs;
  if (timing) s += "  (" + std::to_string(static_cast<long long>(rep.elapsed_ms)) + " ms)";
  for (const auto& f : rep.failures) s += "\n    " + f;
  return s;
}

int cmd_verify(const Config& c) {
  if (c.all) {
    auto results = run_suite(acceptance_suite(), c.jobs);
    bool ok = true;
    json out = json::array();
    for (const auto& r : results) {
      ok = ok && r.pass;
      if (c.format == "json") {
        json reps = json::array();
        for (const auto& rep : r.reports) reps.push_back(rep.to_json(c.timing));
        json j{{"criterion", r.id}, {"title", r.title}, {"status", r.pass ? "pass" : "fail"}, {"reports", reps}};
        if (r.internal_error) j["internal_error"] = true;
        out.push_back(j);
      } else {
        std::cout << "criterion " << std::setw(2) << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title;
        if (c.timing) std::cout << "  (" << static_cast<long long>(r.elapsed_ms) << " ms)";
        std::cout << "\n";
        for (const auto& rep : r.reports)
          if (!rep.pass) std::cout << "  " << report_line(rep, c.timing) << "\n";
      }
    }
    if (c.format == "json") std::cout << out.dump() << "\n";
    return ok ? 0 : 1;
  }
  if (c.check.empty()) throw Usage("verify needs a check name or --all");
  VerificationReport rep = run_named(c);
  if (c.format == "json") std::cout << rep.to_json(c.timing).dump() << "\n";
  else std::cout << report_line(rep, c.timing) << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_fourier(const Config& c) {
  auto go = [&](const FourierTransform& phi) {
    DimVector d = grade(c, *phi.source());
    json out = json::array();
    for (const IsoClass& k : phi.source()->classes(d)) {
      InvariantFunction img = phi(HallElement::basis(phi.source(), k));
      if (c.format == "json") {
        out.push_back({{"source", phi.source()->render(k)}, {"image", img.to_json()}});
      } else {
        std::cout << "Phi[" << phi.source()->render(k) << "]\n";
        std::vector<std::vector<std::string>> rows{{"class", "value"}};
        for (const auto& [t, v] : img.terms()) rows.push_back({phi.target()->render(t), coeff_to_string(v)});
        print_table(rows);
      }
    }
    if (c.format == "json") std::cout << out.dump() << "\n";
    return 0;
  };
  if (c.quiver == "a2") return go(a2_reversal(c.q));
  if (c.quiver == "k2") return go(kronecker_to_cyclic(c.q));
  throw Usage("fourier needs --quiver a2 or k2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hall algebra computations for cyclic, Kronecker and A2 quivers"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--quiver", c.quiver, "c1 | cr:<r> | k2 | a2 | c2full");
  app.add_option("--q", c.q, "field size");
  app.add_flag("--symbolic", c.symbolic, "work over Q(v) where supported");
  app.add_option("--r", c.r, "cyclic quiver size / rank parameter");
  app.add_option("--n", c.n, "degree parameter");
  app.add_option("--m", c.m, "secondary parameter (axioms: dimension bound)");
  app.add_option("--d", c.d, "dimension vector, e.g. 1,1");
  app.add_option("--cache-dir", c.cache_dir, "persist Hall tables here");
  app.add_option("--format", c.format, "table | json")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--jobs", c.jobs, "parallel verification cells")->check(CLI::PositiveNumber);
  app.add_flag("--timing", c.timing, "include elapsed times in reports");

  app.add_subcommand("isoclasses", "isomorphism classes at a dimension vector");
  auto* hn = app.add_subcommand("hallnum", "Hall number F^L_{M,N}");
  auto* hp = app.add_subcommand("hallpoly", "Hall polynomial on a nilpotent cyclic quiver");
  for (auto* s : {hn, hp}) {
    s->add_option("--L", c.L)->required();
    s->add_option("--M", c.M)->required();
    s->add_option("--N", c.N)->required();
  }
  app.add_subcommand("primitive", "primitive elements")->add_option("--kind", c.kind, "p | c | x | p0 | pinf | pK2 | solver");
  auto* ver = app.add_subcommand("verify", "run a named check or the whole suite");
  ver->add_option("check", c.check, "check name");
  ver->add_flag("--all", c.all, "run the acceptance suite");
  ver->add_option("--anchor", c.anchor, "tube label for tube_basis");
  app.add_subcommand("fourier", "Fourier transform of the basis at a grade");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!c.cache_dir.empty()) Engine::set_default_store(std::make_shared<FileHallStore>(c.cache_dir));
    std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "isoclasses") return cmd_isoclasses(c);
    if (cmd == "hallnum") return cmd_hallnum(c);
    if (cmd == "hallpoly") return cmd_hallpoly(c);
    if (cmd == "primitive") return cmd_primitive(c);
    if (cmd == "verify") return cmd_verify(c);
    if (cmd == "fourier") return cmd_fourier(c);
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
