#pragma once

#include <cstdint>
#include <string>

#include "hlya/document.hpp"

namespace hlya {

inline constexpr const char* tool_name = "hlya";
inline constexpr const char* tool_version = "0.1.0";

/* Every command driver returns the certificate it would print plus the exit
   code for the soft outcomes (failed check, rejected witness, inconclusive
   search). Hard errors propagate as exceptions; exit_code_for maps them onto
   the stable process-level contract. */
struct CommandResult {
  json certificate;
  int exit_code = 0;
};

int exit_code_for(const Error& e);

/* Inputs are paths to JSON documents, or fixture:<name> for a built-in. */

struct CheckCmd {
  std::string input;
  unsigned threads = 0;
};
CommandResult cmd_check(const CheckCmd& c);

/* ideal accepts: "center", "derived", the name of a subspace listed in the
   document, @<path> to a JSON array of basis rows, or that array inline. */
struct QuotientCmd {
  std::string input;
  std::string ideal = "center";
  std::string output;
};
CommandResult cmd_quotient(const QuotientCmd& c);

struct DirectSumCmd {
  std::string left;
  std::string right;
  std::string output;
};
CommandResult cmd_direct_sum(const DirectSumCmd& c);

enum class FactorSetMode { Extract, Extend, Roundtrip };

struct FactorSetCmd {
  std::string input;           /* algebra (extract/roundtrip) or quotient (extend) */
  FactorSetMode mode = FactorSetMode::Roundtrip;
  std::string factor_set;      /* extend: factor-set document path */
  std::string center_twist;    /* extend: @<path> or inline matrix, default identity */
  std::string output;          /* extract: factor set; extend/roundtrip: extension */
  unsigned threads = 0;
};
CommandResult cmd_factor_set(const FactorSetCmd& c);

struct IsoclinicCmd {
  std::string left;
  std::string right;
  std::string witness;        /* verify mode: witness document path */
  bool search = false;
  std::size_t budget = 2'000'000;
  long bound = 2;
  unsigned threads = 0;
  std::string output;         /* search mode: found witness document */
};
CommandResult cmd_isoclinic(const IsoclinicCmd& c);

struct DecomposeCmd {
  std::string input;
  std::string out_stem;
  std::string out_abelian;
  std::string out_witness;
  unsigned threads = 0;
};
CommandResult cmd_decompose(const DecomposeCmd& c);

struct CorpusCmd {
  std::uint32_t p = 2;
  std::size_t dim = 2;
  std::size_t count = 10;
  std::uint64_t seed = 0;
  bool exhaustive = false;  /* dim-2 full sweep instead of sampling */
  std::string out_dir;
};
CommandResult cmd_corpus(const CorpusCmd& c);

}  // namespace hlya
