#include "pcrystal/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace pcrystal;

namespace {

struct Request {
  std::string type;
  int rank = 0;
  std::string object; // binf, or blambda when --lambda is given
  std::string lambda;
  std::optional<int> depth;
  std::string source = "table";
  std::string format = "text";
  std::optional<int> node;
};

struct Resolved {
  CartanDatum cartan;
  Object object;
  Source source;
  std::optional<Weight> lambda;
};

int natural_rank(const std::string &t) {
  std::string u = t;
  for (char &c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "F4") return 4;
  if (u == "G2") return 2;
  if (u == "E6") return 6;
  if (u == "E7") return 7;
  if (u == "E8") return 8;
  return 0;
}

Weight parse_weight(const std::string &s, int rank) {
  std::vector<Int> c;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception &) {
      throw crystal_error("malformed lambda entry '" + item + "'");
    }
    if (used != item.size()) throw crystal_error("malformed lambda entry '" + item + "'");
    c.push_back(v);
  }
  if (static_cast<int>(c.size()) != rank)
    throw crystal_error("lambda has " + std::to_string(c.size()) + " entries but the rank is " + std::to_string(rank));
  Weight w(std::move(c));
  if (!w.dominant()) throw crystal_error("lambda must be dominant (all entries >= 0)");
  return w;
}

Resolved resolve(const Request &r, bool need_lambda_for_blambda = true) {
  int rank = r.rank ? r.rank : natural_rank(r.type);
  if (rank == 0) throw crystal_error("--rank is required for type " + r.type);
  if (int nat = natural_rank(r.type); nat && nat != rank)
    throw crystal_error("type " + r.type + " has rank " + std::to_string(nat));
  auto type = parse_type_label(r.type, rank);
  if (!type) throw crystal_error("unknown type " + r.type);
  const bool blambda = r.object.empty() ? !r.lambda.empty() : r.object == "blambda";
  Resolved out{cartan_matrix(*type, rank), blambda ? Object::Blambda : Object::Binf,
               r.source == "table" ? Source::Table : Source::Closure, std::nullopt};
  if (!r.lambda.empty()) out.lambda = parse_weight(r.lambda, rank);
  if (need_lambda_for_blambda && out.object == Object::Blambda && !out.lambda)
    throw crystal_error("--object blambda requires --lambda");
  return out;
}

bool telescoping(TypeLabel t) { return t == TypeLabel::B || t == TypeLabel::C || t == TypeLabel::D; }

void print_system(const Request &r, const Resolved &z, const FormSet &forms) {
  if (r.format == "json") {
    SystemHeader h{z.cartan.type(), z.cartan.rank(), z.object, z.lambda, z.source};
    std::cout << system_to_json(h, forms).dump(2) << "\n";
  } else {
    std::cout << "# " << z.cartan.label() << " " << to_string(z.object) << " " << to_string(z.source) << ", "
              << forms.size() << " forms\n"
              << format_system_text(forms, z.cartan.rank(), telescoping(z.cartan.type()));
  }
}

int cmd_emit(const Request &r) {
  Resolved z = resolve(r);
  Polyhedron p = build(z.cartan.type(), z.cartan.rank(), z.object, z.source);
  if (z.lambda && !check_ample(p.forms, *z.lambda)) throw crystal_error("(iota, lambda) is not ample");
  print_system(r, z, p.forms);
  return 0;
}

int cmd_closure(const Request &r) {
  Resolved z = resolve(r, false);
  const int n = z.cartan.rank();
  IotaSequence iota(z.cartan);
  const int bound = default_position_bound(z.cartan.type(), n);
  ClosureResult c;
  if (r.node) {
    if (*r.node < 1 || *r.node > n) throw crystal_error("--node out of range");
    c = z.object == Object::Binf ? xi_i_closure(iota, *r.node, bound, closure_cap())
                                 : lambda_i_closure(iota, *r.node, bound, closure_cap());
  } else {
    if (z.object != Object::Binf) throw crystal_error("closure of a B(lambda) system needs --node");
    c = closure(iota, closure_generators(z.cartan.type(), n), Operator::S, bound, closure_cap());
  }
  z.source = Source::Closure;
  for (const ViolationEvent &v : c.violations)
    std::cerr << "note: negative first-occurrence coefficient at position " << v.position << " in "
              << format_form(v.form) << "\n";
  print_system(r, z, c.forms);
  return 0;
}

int cmd_enumerate(const Request &r) {
  Resolved z = resolve(r);
  Polyhedron p = build(z.cartan.type(), z.cartan.rank(), z.object, z.source);
  ZVectorSet pts;
  if (z.object == Object::Blambda) {
    pts = enumerate_blambda(p, *z.lambda);
  } else {
    if (!r.depth) throw crystal_error("enumerating B(infinity) requires --depth");
    pts = enumerate_binf_truncated(p, *r.depth);
  }
  if (r.format == "json") {
    json arr = json::array();
    for (const ZVector &x : pts) arr.push_back(vector_to_json(p.iota, x));
    json out{{"type", type_name(z.cartan.type(), z.cartan.rank())},
             {"rank", z.cartan.rank()},
             {"object", to_string(z.object)},
             {"lambda", z.lambda ? json(z.lambda->coefficients) : json(nullptr)},
             {"source", to_string(z.source)},
             {"depth", r.depth ? json(*r.depth) : json(nullptr)},
             {"count", pts.size()},
             {"points", arr}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "# " << pts.size() << " points\n";
    for (const ZVector &x : pts) std::cout << format_vector(p.iota, x) << "\n";
  }
  return 0;
}

int cmd_graph(const Request &r) {
  Resolved z = resolve(r);
  IotaSequence iota(z.cartan);
  CrystalGraph g;
  if (z.object == Object::Blambda) {
    g = crystal_graph(z.cartan, *z.lambda);
  } else {
    if (!r.depth) throw crystal_error("a B(infinity) graph requires --depth");
    g = crystal_graph(iota, generate_binf(iota, *r.depth));
  }
  if (r.format == "dot") {
    std::cout << format_dot(iota, g);
  } else if (r.format == "json") {
    std::cout << graph_to_json(iota, g).dump(2) << "\n";
  } else {
    for (auto [s, i, t] : g.edges)
      std::cout << format_vector(iota, g.nodes[s]) << " -" << i << "-> " << format_vector(iota, g.nodes[t]) << "\n";
  }
  return 0;
}

int cmd_verify(const Request &r, bool source_given) {
  Resolved z = resolve(r, false);
  VerifyOptions opt;
  opt.lambda = z.lambda;
  if (r.depth) opt.depth = *r.depth;
  if (source_given) opt.sources = {z.source};
  VerifyReport rep = verify(z.cartan, opt);
  if (r.format == "json")
    std::cout << report_to_json(rep).dump(2) << "\n";
  else
    std::cout << format_report(rep) << (rep.passed() ? "all checks passed\n" : "verification FAILED\n");
  return rep.passed() ? 0 : 2;
}

int cmd_dim(const Request &r) {
  Resolved z = resolve(r, false);
  if (!z.lambda) throw crystal_error("dim requires --lambda");
  const BigInt d = weyl_dim(z.cartan, *z.lambda);
  if (r.format == "json")
    std::cout << json{{"type", type_name(z.cartan.type(), z.cartan.rank())}, {"lambda", z.lambda->coefficients},
                      {"dim", d.str()}}
                     .dump(2)
              << "\n";
  else
    std::cout << d << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Polyhedral realizations of crystal bases"};
  app.require_subcommand(1);
  Request r;

  auto common = [&](CLI::App *s, std::vector<std::string> formats) {
    s->add_option("--type", r.type, "Cartan type: A, B, C, D, F4, E6, E7, E8, G2")->required();
    s->add_option("--rank", r.rank, "rank (implied for exceptional types)");
    s->add_option("--lambda", r.lambda, "dominant weight as comma-separated integers");
    s->add_option("--format", r.format)->check(CLI::IsMember(formats));
  };
  auto object = [&](CLI::App *s) { s->add_option("--object", r.object)->check(CLI::IsMember({"binf", "blambda"})); };
  auto source = [&](CLI::App *s) {
    return s->add_option("--source", r.source)->check(CLI::IsMember({"table", "closure"}));
  };
  auto depth = [&](CLI::App *s) { s->add_option("--depth", r.depth)->check(CLI::NonNegativeNumber); };

  auto *emit = app.add_subcommand("emit", "print an inequality system");
  common(emit, {"json", "text"});
  object(emit);
  source(emit);

  auto *clo = app.add_subcommand("closure", "print an S or S^ closure");
  common(clo, {"json", "text"});
  object(clo);
  clo->add_option("--node", r.node, "close xi^(i) (binf) or lambda^(i) (blambda)");

  auto *en = app.add_subcommand("enumerate", "list lattice points");
  common(en, {"json", "text"});
  object(en);
  source(en);
  depth(en);

  auto *gr = app.add_subcommand("graph", "crystal graph of B(lambda) or truncated B(infinity)");
  common(gr, {"json", "text", "dot"});
  object(gr);
  depth(gr);

  auto *ver = app.add_subcommand("verify", "run the verification harness");
  common(ver, {"json", "text"});
  CLI::Option *ver_source = source(ver);
  depth(ver);

  auto *dim = app.add_subcommand("dim", "Weyl dimension of V(lambda)");
  common(dim, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*emit) return cmd_emit(r);
    if (*clo) return cmd_closure(r);
    if (*en) return cmd_enumerate(r);
    if (*gr) return cmd_graph(r);
    if (*ver) return cmd_verify(r, ver_source->count() > 0);
    if (*dim) return cmd_dim(r);
  } catch (const crystal_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
