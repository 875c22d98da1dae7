#include "rosecover/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rosecover/battery.hpp"
#include "rosecover/cover.hpp"
#include "rosecover/cw_check.hpp"
#include "rosecover/edge_slide.hpp"
#include "rosecover/error.hpp"
#include "rosecover/homology.hpp"
#include "rosecover/orbit_mover.hpp"
#include "rosecover/selftest.hpp"
#include "rosecover/serialize.hpp"

namespace rosecover {

namespace {

struct CoverOptions {
  std::string group;
  int n = 0;
  std::string images;
  bool trusted = false;
  bool json = false;
};

bool is_builtin_name(const std::string &text) {
  const std::string name = text.substr(0, text.find(':'));
  return name == "trivial" || name == "cyclic" || name == "elementary_abelian" || name == "dihedral" ||
         name == "symmetric";
}

FiniteGroup load_group(const CoverOptions &opts) {
  if (is_builtin_name(opts.group))
    return builtin_group(parse_group_family(opts.group));
  std::ifstream in(opts.group);
  if (!in)
    throw Error(Errc::InvalidArgument, "'" + opts.group + "' is neither a builtin family nor a readable file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &ex) {
    throw Error(Errc::Parse, opts.group + ": " + ex.what());
  }
  return group_from_json(j, opts.trusted);
}

GeneratorImages parse_images(const FiniteGroup &group, const std::string &text) {
  GeneratorImages images;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const bool numeric = !token.empty() && token.find_first_not_of("0123456789") == std::string::npos;
    Element x = numeric ? Element(std::stol(token)) : group.find_label(token);
    if (x < 0 || std::size_t(x) >= group.order())
      throw Error(Errc::InvalidArgument, "unknown group element '" + token + "'");
    images.images.push_back(x);
  }
  return images;
}

CoverGraph load_cover(const CoverOptions &opts) {
  FiniteGroup group = load_group(opts);
  GeneratorImages images = parse_images(group, opts.images);
  if (opts.n != 0 && opts.n != images.n())
    throw Error(Errc::InvalidArgument, "--n " + std::to_string(opts.n) + " but " + std::to_string(images.n()) +
                                           " images were given");
  if (images.n() < 1)
    throw Error(Errc::InvalidArgument, "no generator images given");
  return build_cover(CoverSpec{std::move(group), std::move(images)});
}

int exit_code_for(Errc code) {
  switch (code) {
  case Errc::Disconnected: return kExitDisconnected;
  case Errc::ZeroVector: return kExitZeroVector;
  case Errc::RankTooSmall: return kExitRankTooSmall;
  case Errc::SearchExhausted: return kExitSearchExhausted;
  case Errc::DoesNotLift: return kExitDoesNotLift;
  default: return kExitInvalidConfig;
  }
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  if (!out)
    throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
  out << content;
}

std::string join(const std::vector<std::size_t> &xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

int cmd_build(const CoverOptions &opts, const std::string &dot_path, std::ostream &out) {
  const CoverGraph cover = load_cover(opts);
  const HomologyBasis basis = cycle_basis(cover);
  if (!dot_path.empty())
    write_file(dot_path, to_dot(cover));
  if (opts.json)
    out << json{{"V", cover.vertex_count()}, {"E", cover.edge_count()}, {"rank", basis.rank()},
                {"basis", to_json(basis)}}
               .dump(2)
        << "\n";
  else
    out << "V=" << cover.vertex_count() << " E=" << cover.edge_count() << " rank=" << basis.rank() << "\n";
  return kExitOk;
}

int cmd_verify_cw(const CoverOptions &opts, std::ostream &out) {
  const CoverGraph cover = load_cover(opts);
  const HomologyBasis basis = cycle_basis(cover);
  const CharacterReport report = verify_chevalley_weil(cover, basis);
  std::optional<IsotypicReport> iso;
  try {
    iso = isotypic_decomposition(cover, basis);
  } catch (const Error &e) {
    if (e.code() != Errc::UnsupportedGroup)
      throw;
  }
  bool ok = report.verdict;
  if (iso) {
    std::size_t total = 0;
    for (auto d : iso->dims)
      total += d;
    ok = ok && total == basis.rank();
  }
  if (opts.json) {
    json j{{"character", to_json(report)}, {"labels", cover.group().labels()}};
    if (iso)
      j["isotypic"] = to_json(*iso);
    out << j.dump(2) << "\n";
  } else {
    out << "rank=" << report.rank << "\n";
    out << "traces:";
    for (std::size_t g = 0; g < report.traces.size(); ++g)
      out << " " << cover.group().label(Element(g)) << "=" << rational_to_string(report.traces[g]);
    out << "\n";
    if (iso) {
      out << "isotypic characters:";
      for (const auto &chi : iso->characters)
        out << " " << chi.name;
      out << "\n";
      out << "isotypic dims: " << join(iso->dims) << "\n";
    }
    out << "verdict=" << (ok ? "true" : "false") << "\n";
  }
  return ok ? kExitOk : kExitFailed;
}

struct MoveArgs {
  std::string vector;
  std::string vector_word;
  std::uint64_t seed = 0;
  std::size_t max_candidates = 10000;
  int depth = 10;
  std::string out_path;
};

int cmd_move(const CoverOptions &opts, const MoveArgs &args, std::ostream &out) {
  const CoverGraph cover = load_cover(opts);
  const HomologyBasis basis = cycle_basis(cover);
  if (args.vector.empty() == args.vector_word.empty())
    throw Error(Errc::InvalidArgument, "give exactly one of --vector and --vector-word");
  if (args.depth < 0)
    throw Error(Errc::InvalidArgument, "--depth must be nonnegative");
  HomologyClass v;
  if (!args.vector.empty()) {
    v = parse_rational_list(args.vector);
    if (v.size() != basis.rank())
      throw Error(Errc::InvalidArgument, "vector has " + std::to_string(v.size()) + " coordinates, H_1 has rank " +
                                             std::to_string(basis.rank()));
  } else {
    const EdgePath lift = lift_word(cover, parse_word(args.vector_word), FiniteGroup::identity());
    if (!is_closed(cover, lift))
      throw Error(Errc::InvalidArgument, "the lift of '" + args.vector_word + "' at the identity is not closed");
    v = path_class(cover, basis, lift);
  }

  MoveOptions options;
  options.search.seed = args.seed;
  options.search.max_candidates = args.max_candidates;
  options.depth = args.depth;
  const MoveCertificate cert = move_vector(cover, basis, v, options);
  const VerificationResult check = verify_certificate(cover, basis, v, cert);

  json j = to_json(cert);
  j["vector"] = to_json(v);
  j["verified"] = check.ok;
  if (!args.out_path.empty())
    write_file(args.out_path, j.dump(2) + "\n");
  if (opts.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "petal=" << cert.petal << " pairing_edge=(" << cover.group().label(cert.pairing_edge.vertex) << ","
        << cert.pairing_edge.petal << ")\n";
    out << "ell=" << format_word(cert.ell) << " (length " << cert.ell.length() << ")\n";
    out << "orbit_rank=" << cert.orbit_rank_value << " iterates_checked=" << cert.iterates_checked << "\n";
    out << "verified=" << (check.ok ? "true" : "false") << "\n";
  }
  return check.ok ? kExitOk : kExitFailed;
}

int cmd_slide(const CoverOptions &opts, int petal, const std::string &ell, std::ostream &out) {
  const CoverGraph cover = load_cover(opts);
  const HomologyBasis basis = cycle_basis(cover);
  const SlideAutomorphism slide = make_slide(cover.n(), petal, parse_word(ell));
  const LiftedSlide lifted = lifted_action_formula(slide, cover, basis);
  const bool agrees = lifted_action_oracle(slide, cover, basis) == lifted.matrix;
  if (opts.json) {
    json j = to_json(lifted);
    j["oracle_agrees"] = agrees;
    out << j.dump(2) << "\n";
  } else {
    out << "slide a" << petal << " -> " << format_word(free_reduce(slide.ell * Word::generator(petal))) << "\n";
    for (std::size_t r = 0; r < lifted.matrix.rows(); ++r) {
      for (std::size_t c = 0; c < lifted.matrix.cols(); ++c)
        out << (c ? " " : "") << rational_to_string(lifted.matrix(r, c));
      out << "\n";
    }
    out << "oracle_agrees=" << (agrees ? "true" : "false") << "\n";
  }
  return agrees ? kExitOk : kExitFailed;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Finite covers of roses: homology, edge slides and orbit certificates", "rosecover"};
  app.require_subcommand(1);

  CoverOptions cover_opts;
  auto add_cover_options = [&](CLI::App *sub) {
    sub->add_option("--group", cover_opts.group, "builtin family (cyclic:5, elementary_abelian:2,2, ...) or JSON path")
        ->required();
    sub->add_option("--n", cover_opts.n, "number of petals (defaults to the number of images)");
    sub->add_option("--images", cover_opts.images, "comma-separated element indices or labels")->required();
    sub->add_flag("--trusted", cover_opts.trusted, "skip the associativity check for large JSON groups");
    sub->add_flag("--json", cover_opts.json, "print JSON");
  };

  std::string dot_path;
  auto *build = app.add_subcommand("build", "build the cover and report its size and H_1 rank");
  add_cover_options(build);
  build->add_option("--dot", dot_path, "write the cover in Graphviz format");

  auto *verify = app.add_subcommand("verify-cw", "check the character of H_1 against Q[G]^(n-1) + Q");
  add_cover_options(verify);

  MoveArgs move_args;
  auto *move = app.add_subcommand("move", "find a lifted slide moving a class on an infinite orbit");
  add_cover_options(move);
  move->add_option("--vector", move_args.vector, "coordinates in the fundamental-cycle basis, e.g. 1,0,-1/2");
  move->add_option("--vector-word", move_args.vector_word, "word whose closed lift at the identity gives the class");
  move->add_option("--seed", move_args.seed, "seed for the randomized loop search");
  move->add_option("--max-candidates", move_args.max_candidates, "loop search budget");
  move->add_option("--depth", move_args.depth, "number of iterates to check");
  move->add_option("--out", move_args.out_path, "write the certificate JSON to this file");

  int petal = 1;
  std::string ell;
  auto *slide = app.add_subcommand("slide", "print the action on H_1 of a lifted edge slide");
  add_cover_options(slide);
  slide->add_option("--petal", petal, "petal being slid")->required();
  slide->add_option("--ell", ell, "loop word, e.g. a2.a3^-1")->required();

  bool quick = false;
  std::string fault;
  auto *selftest = app.add_subcommand("selftest", "run the invariant battery");
  selftest->add_flag("--quick", quick, "only groups of order <= 8");
  selftest->add_option("--inject-fault", fault, "test hook: force the named suite to fail");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  try {
    if (*build)
      return cmd_build(cover_opts, dot_path, out);
    if (*verify)
      return cmd_verify_cw(cover_opts, out);
    if (*move)
      return cmd_move(cover_opts, move_args, out);
    if (*slide)
      return cmd_slide(cover_opts, petal, ell, out);
    if (*selftest)
      return run_selftest(SelftestOptions{quick, fault}, out) ? kExitOk : kExitFailed;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInvalidConfig;
}

} // namespace rosecover
