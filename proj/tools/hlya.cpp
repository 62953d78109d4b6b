#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "hlya/certify.hpp"
#include "hlya/fixtures.hpp"

namespace {

std::uint32_t parse_field_flag(const std::string& s) {
  if (s == "F2" || s == "f2" || s == "2") return 2;
  if (s == "F3" || s == "f3" || s == "3") return 3;
  throw hlya::ParseError("unknown field: " + s + " (expected F2 or F3)");
}

std::string fixture_help() {
  std::string out = "built-ins:";
  for (const auto& n : hlya::fixture_names()) out += " fixture:" + n;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hlya;

  CLI::App app{"Exact arithmetic toolkit for algebras with a twisted binary and "
               "ternary bracket: identity checking, quotients, central extensions, "
               "isoclinism witnesses, and stem decompositions."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));

  unsigned threads = 0;
  std::string cert_path;
  app.add_option("--threads", threads,
                 "Worker threads (0 = HLYA_THREADS env or all cores)");
  app.add_option("-c,--certificate", cert_path,
                 "Also write the certificate JSON to this file");

  std::function<CommandResult()> run;

  CheckCmd checkc;
  auto* check = app.add_subcommand(
      "check", "Verify all defining identities and report center/derived structure");
  check->add_option("input", checkc.input, "Algebra document path; " + fixture_help())
      ->required();
  check->callback([&] {
    run = [&] {
      checkc.threads = threads;
      return cmd_check(checkc);
    };
  });

  QuotientCmd quotc;
  auto* quot = app.add_subcommand("quotient", "Quotient by a hom-ideal");
  quot->add_option("input", quotc.input, "Algebra document path or fixture:<name>")
      ->required();
  quot->add_option("--ideal", quotc.ideal,
                   "center | derived | <named subspace> | @<file> | inline JSON rows");
  quot->add_option("-o,--output", quotc.output, "Write the quotient algebra document");
  quot->callback([&] {
    run = [&] { return cmd_quotient(quotc); };
  });

  DirectSumCmd sumc;
  auto* dsum = app.add_subcommand("direct-sum", "Direct sum of two algebras");
  dsum->add_option("left", sumc.left, "First algebra document")->required();
  dsum->add_option("right", sumc.right, "Second algebra document")->required();
  dsum->add_option("-o,--output", sumc.output, "Write the sum algebra document");
  dsum->callback([&] {
    run = [&] { return cmd_direct_sum(sumc); };
  });

  FactorSetCmd fsc;
  bool fs_extract = false, fs_roundtrip = false;
  auto* fscmd = app.add_subcommand(
      "factor-set", "Extract a factor set, build a central extension, or both");
  fscmd->add_option("input", fsc.input, "Algebra document path or fixture:<name>")
      ->required();
  fscmd->add_flag("--extract", fs_extract, "Extract and validate a factor set");
  fscmd->add_option("--extend", fsc.factor_set,
                    "Build the central extension of the input by this factor set");
  fscmd->add_flag("--roundtrip", fs_roundtrip,
                  "Extract, extend, and verify the reconstruction isomorphism (default)");
  fscmd->add_option("--center-twist", fsc.center_twist,
                    "Extend mode: twist on the center, @<file> or inline (default identity)");
  fscmd->add_option("-o,--output", fsc.output,
                    "Write the factor set (extract) or the extension (extend/roundtrip)");
  fscmd->callback([&] {
    run = [&] {
      int modes = (fs_extract ? 1 : 0) + (fsc.factor_set.empty() ? 0 : 1) +
                  (fs_roundtrip ? 1 : 0);
      if (modes > 1)
        throw ParseError("choose one of --extract, --extend, --roundtrip");
      fsc.mode = fs_extract ? FactorSetMode::Extract
                 : !fsc.factor_set.empty() ? FactorSetMode::Extend
                                           : FactorSetMode::Roundtrip;
      fsc.threads = threads;
      return cmd_factor_set(fsc);
    };
  });

  IsoclinicCmd isoc;
  auto* iso = app.add_subcommand(
      "isoclinic", "Verify a supplied isoclinism witness or search for one");
  iso->add_option("left", isoc.left, "First algebra document")->required();
  iso->add_option("right", isoc.right, "Second algebra document")->required();
  iso->add_option("--witness", isoc.witness, "Witness document to verify");
  iso->add_flag("--search", isoc.search, "Enumerate candidate witnesses");
  iso->add_option("--budget", isoc.budget, "Search: max candidates examined");
  iso->add_option("--bound", isoc.bound, "Search over Q: integer entry window");
  iso->add_option("-o,--output", isoc.output, "Search: write a found witness here");
  iso->callback([&] {
    run = [&] {
      if (isoc.search == !isoc.witness.empty())
        throw ParseError("choose exactly one of --witness <path> or --search");
      isoc.threads = threads;
      return cmd_isoclinic(isoc);
    };
  });

  DecomposeCmd decc;
  auto* dec = app.add_subcommand(
      "decompose", "Split into a stem algebra and an abelian direct summand");
  dec->add_option("input", decc.input, "Algebra document path or fixture:<name>")
      ->required();
  dec->add_option("--out-stem", decc.out_stem, "Write the stem part document");
  dec->add_option("--out-abelian", decc.out_abelian, "Write the abelian part document");
  dec->add_option("--out-witness", decc.out_witness, "Write the isomorphism witness");
  dec->callback([&] {
    run = [&] {
      decc.threads = threads;
      return cmd_decompose(decc);
    };
  });

  CorpusCmd corc;
  std::string corpus_field = "F2";
  auto* cor = app.add_subcommand(
      "corpus", "Generate a directory of randomly sampled verified algebras");
  cor->add_option("out_dir", corc.out_dir, "Directory for the generated documents")
      ->required();
  cor->add_option("--field", corpus_field, "F2 or F3");
  cor->add_option("--dim", corc.dim, "Dimension (1..4)");
  cor->add_option("--count", corc.count, "Number of algebras to keep");
  cor->add_option("--seed", corc.seed, "Sampling seed");
  cor->add_flag("--exhaustive", corc.exhaustive,
                "Enumerate every dim-2 structure instead of sampling");
  cor->callback([&] {
    run = [&] {
      corc.p = parse_field_flag(corpus_field);
      return cmd_corpus(corc);
    };
  });

  try {
    app.parse(argc, argv);
    if (!run) return 2;
    CommandResult res = run();
    std::string text = res.certificate.dump(2) + "\n";
    std::fputs(text.c_str(), stdout);
    if (!cert_path.empty()) write_file(cert_path, text);
    return res.exit_code;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
