#include "hlya/certify.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <utility>

#include "hlya/axioms.hpp"
#include "hlya/corpus.hpp"
#include "hlya/decompose.hpp"
#include "hlya/digest.hpp"
#include "hlya/extensions.hpp"
#include "hlya/fixtures.hpp"
#include "hlya/isoclinism.hpp"
#include "hlya/quotient.hpp"
#include "hlya/subobjects.hpp"

namespace hlya {

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e) != nullptr) return 2;
  if (dynamic_cast<const ConstructionError*>(&e) != nullptr) return 3;
  if (dynamic_cast<const InconclusiveError*>(&e) != nullptr) return 4;
  return 1;
}

namespace {

template <class T>
struct doc_scalar;
template <class K>
struct doc_scalar<AlgebraDocument<K>> {
  using type = K;
};
template <class D>
using doc_scalar_t = typename doc_scalar<std::decay_t<D>>::type;

/* Certificates carry a digest for every file (or fixture) they depend on,
   so re-checking one later can detect a changed input. */
class Cert {
 public:
  explicit Cert(std::string command) : start_(std::chrono::steady_clock::now()) {
    j_["tool"] = json{{"name", tool_name}, {"version", tool_version}};
    j_["command"] = std::move(command);
    j_["inputs"] = json::array();
  }

  void input(const std::string& source, const std::string& digest) {
    j_["inputs"].push_back(json{{"source", source}, {"digest", digest}});
  }

  void output(const std::string& path, const std::string& digest) {
    if (!j_.contains("outputs")) j_["outputs"] = json::array();
    j_["outputs"].push_back(json{{"path", path}, {"digest", digest}});
  }

  void emit(const std::string& path, const json& doc) {
    if (path.empty()) return;
    std::string text = doc.dump(2) + "\n";
    write_file(path, text);
    output(path, fnv1a64_hex(text));
  }

  CommandResult finish(json results, bool verdict, int code) {
    j_["results"] = std::move(results);
    j_["verdict"] = verdict;
    auto dt = std::chrono::steady_clock::now() - start_;
    j_["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    return {std::move(j_), code};
  }

 private:
  json j_;
  std::chrono::steady_clock::time_point start_;
};

struct LoadedInput {
  AnyAlgebraDocument doc;
  std::string source;
  std::string digest;
};

LoadedInput load_input(const std::string& spec) {
  if (spec.rfind("fixture:", 0) == 0) {
    AnyAlgebraDocument doc = fixture(spec.substr(8));
    std::string text = std::visit(
        [](const auto& d) { return algebra_document_json(d.algebra).dump(2); }, doc);
    return {std::move(doc), spec, fnv1a64_hex(text)};
  }
  std::string text = read_file(spec);
  return {load_algebra_document_text(text), spec, fnv1a64_hex(text)};
}

struct RawInput {
  json j;
  std::string source;
  std::string digest;
};

RawInput load_raw(const std::string& path) {
  std::string text = read_file(path);
  return {parse_json_text(text), path, fnv1a64_hex(text)};
}

json failures_json(const std::vector<AxiomFailure>& fs) {
  json out = json::array();
  for (const auto& f : fs)
    out.push_back(json{{"at", f.at}, {"residual", f.residual}});
  return out;
}

json axiom_report_json(const AxiomReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(
        json{{"name", c.name}, {"pass", c.pass}, {"failures", failures_json(c.failures)}});
  return json{{"verdict", rep.verdict}, {"checks", std::move(checks)}};
}

json witness_report_json(const WitnessReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"verdict", rep.verdict}, {"checks", std::move(checks)}};
}

template <class K>
json algebra_summary_json(const Algebra<K>& a) {
  return json{{"field", field_json(a.field())},
              {"dim", a.dim()},
              {"basis", a.basis_names()}};
}

template <class K>
void require_pass(const Algebra<K>& a, unsigned threads) {
  CheckOptions opts;
  opts.threads = threads;
  opts.max_failures = 1;
  AxiomReport rep = check_axioms(a, opts);
  if (rep.verdict) return;
  for (const auto& c : rep.checks)
    if (!c.pass) throw MathError("input algebra fails the axiom check: " + c.name);
}

/* Resolves an ideal spec against a loaded document: a builtin keyword, a
   subspace named in the document, @<path>, or an inline JSON array of rows. */
template <class K>
Subspace<K> resolve_subspace(const std::string& spec, const AlgebraDocument<K>& doc,
                             Cert& cert) {
  const Algebra<K>& a = doc.algebra;
  if (spec == "center") return center(a);
  if (spec == "derived") return derived(a);
  auto named = doc.subspaces.find(spec);
  if (named != doc.subspaces.end()) return named->second;

  json rows;
  if (!spec.empty() && spec[0] == '@') {
    RawInput raw = load_raw(spec.substr(1));
    cert.input(raw.source, raw.digest);
    rows = std::move(raw.j);
  } else if (!spec.empty() && spec[0] == '[') {
    rows = parse_json_text(spec);
  } else {
    throw ParseError("unknown subspace spec: " + spec);
  }
  if (!rows.is_array()) throw ParseError("subspace spec must be an array of rows");
  std::vector<Vec<K>> vs;
  for (const auto& r : rows) vs.push_back(load_vec<K>(r, a.field(), a.dim()));
  return Subspace<K>::span_vecs(vs, a.dim(), a.field());
}

}  // namespace

CommandResult cmd_check(const CheckCmd& c) {
  Cert cert("check");
  LoadedInput in = load_input(c.input);
  cert.input(in.source, in.digest);
  return std::visit(
      [&](const auto& d) -> CommandResult {
        using K = doc_scalar_t<decltype(d)>;
        const Algebra<K>& a = d.algebra;
        CheckOptions opts;
        opts.threads = c.threads;
        AxiomReport rep = check_axioms(a, opts);
        Subspace<K> z = center(a);
        Subspace<K> der = derived(a);
        json results{{"algebra", algebra_summary_json(a)},
                     {"axioms", axiom_report_json(rep)},
                     {"center", subspace_json(z)},
                     {"derived", subspace_json(der)},
                     {"stem", der.contains(z)},
                     {"abelian", is_abelian(a)}};
        return cert.finish(std::move(results), rep.verdict, rep.verdict ? 0 : 1);
      },
      in.doc);
}

CommandResult cmd_quotient(const QuotientCmd& c) {
  Cert cert("quotient");
  LoadedInput in = load_input(c.input);
  cert.input(in.source, in.digest);
  return std::visit(
      [&](const auto& d) -> CommandResult {
        using K = doc_scalar_t<decltype(d)>;
        Subspace<K> ideal = resolve_subspace(c.ideal, d, cert);
        QuotientPresentation<K> qp = quotient_presentation(d.algebra, ideal);
        json doc = algebra_document_json(qp.algebra);
        cert.emit(c.output, doc);
        json results{{"ideal", subspace_json(qp.ideal)},
                     {"transversal", matrix_json(qp.transversal)},
                     {"projection", matrix_json(qp.projection)},
                     {"quotient", algebra_summary_json(qp.algebra)},
                     {"document", std::move(doc)}};
        return cert.finish(std::move(results), true, 0);
      },
      in.doc);
}

CommandResult cmd_direct_sum(const DirectSumCmd& c) {
  Cert cert("direct-sum");
  LoadedInput lin = load_input(c.left);
  LoadedInput rin = load_input(c.right);
  cert.input(lin.source, lin.digest);
  cert.input(rin.source, rin.digest);
  return std::visit(
      [&](const auto& dl, const auto& dr) -> CommandResult {
        if constexpr (!std::is_same_v<std::decay_t<decltype(dl)>,
                                      std::decay_t<decltype(dr)>>) {
          throw FieldMismatch("direct sum over different fields");
        } else {
          auto sum = direct_sum(dl.algebra, dr.algebra);
          json doc = algebra_document_json(sum);
          cert.emit(c.output, doc);
          json results{{"left", algebra_summary_json(dl.algebra)},
                       {"right", algebra_summary_json(dr.algebra)},
                       {"sum", algebra_summary_json(sum)},
                       {"document", std::move(doc)}};
          return cert.finish(std::move(results), true, 0);
        }
      },
      lin.doc, rin.doc);
}

CommandResult cmd_factor_set(const FactorSetCmd& c) {
  const char* names[] = {"extract", "extend", "roundtrip"};
  Cert cert(std::string("factor-set ") + names[static_cast<int>(c.mode)]);
  LoadedInput in = load_input(c.input);
  cert.input(in.source, in.digest);
  return std::visit(
      [&](const auto& d) -> CommandResult {
        using K = doc_scalar_t<decltype(d)>;
        const Algebra<K>& a = d.algebra;
        CheckOptions opts;
        opts.threads = c.threads;

        if (c.mode == FactorSetMode::Extend) {
          if (c.factor_set.empty())
            throw ParseError("extend mode needs a factor-set document");
          RawInput raw = load_raw(c.factor_set);
          cert.input(raw.source, raw.digest);
          FactorSet<K> fs = load_factor_set_as<K>(raw.j, a.field());
          Matrix<K> ct = Matrix<K>::identity(fs.z, a.field());
          if (!c.center_twist.empty()) {
            json m;
            if (c.center_twist[0] == '@') {
              RawInput mraw = load_raw(c.center_twist.substr(1));
              cert.input(mraw.source, mraw.digest);
              m = std::move(mraw.j);
            } else {
              m = parse_json_text(c.center_twist);
            }
            ct = load_matrix<K>(m, a.field(), fs.z, fs.z);
          }
          Algebra<K> omega = central_extension(ct, a, fs);
          AxiomReport rep = check_axioms(omega, opts);
          auto zrep = extension_center_report(omega, fs.z);
          json doc = algebra_document_json(omega);
          cert.emit(c.output, doc);
          json results{{"extension", algebra_summary_json(omega)},
                       {"axioms", axiom_report_json(rep)},
                       {"center", subspace_json(zrep.actual)},
                       {"center_matches_summand", zrep.matches_center_summand},
                       {"document", std::move(doc)}};
          return cert.finish(std::move(results), rep.verdict, rep.verdict ? 0 : 1);
        }

        require_pass(a, c.threads);
        auto [fs, sect] = extract_factor_set(a);
        AxiomReport vrep =
            validate_factor_set(fs, sect.center_twist, sect.presentation.algebra, opts);
        json fsdoc = factor_set_json(fs);
        json section{{"center_embedding", matrix_json(sect.center_embedding)},
                     {"center_twist", matrix_json(sect.center_twist)},
                     {"transversal", matrix_json(sect.presentation.transversal)},
                     {"quotient", algebra_summary_json(sect.presentation.algebra)}};

        if (c.mode == FactorSetMode::Extract) {
          cert.emit(c.output, fsdoc);
          json results{{"factor_set", std::move(fsdoc)},
                       {"section", std::move(section)},
                       {"validation", axiom_report_json(vrep)}};
          return cert.finish(std::move(results), vrep.verdict, vrep.verdict ? 0 : 1);
        }

        Algebra<K> omega = central_extension(sect.center_twist, sect.presentation.algebra, fs);
        AxiomReport xrep = check_axioms(omega, opts);
        auto zrep = extension_center_report(omega, fs.z);
        Matrix<K> phi = reconstruct_iso(a, fs, sect);
        json doc = algebra_document_json(omega);
        cert.emit(c.output, doc);
        bool verdict = vrep.verdict && xrep.verdict;
        json results{{"factor_set", std::move(fsdoc)},
                     {"section", std::move(section)},
                     {"validation", axiom_report_json(vrep)},
                     {"extension_axioms", axiom_report_json(xrep)},
                     {"center", subspace_json(zrep.actual)},
                     {"center_matches_summand", zrep.matches_center_summand},
                     {"iso", matrix_json(phi)},
                     {"iso_verified", true}};
        return cert.finish(std::move(results), verdict, verdict ? 0 : 1);
      },
      in.doc);
}

CommandResult cmd_isoclinic(const IsoclinicCmd& c) {
  Cert cert(c.search ? "isoclinic search" : "isoclinic verify");
  LoadedInput lin = load_input(c.left);
  LoadedInput rin = load_input(c.right);
  cert.input(lin.source, lin.digest);
  cert.input(rin.source, rin.digest);
  return std::visit(
      [&](const auto& dl, const auto& dr) -> CommandResult {
        if constexpr (!std::is_same_v<std::decay_t<decltype(dl)>,
                                      std::decay_t<decltype(dr)>>) {
          throw FieldMismatch("isoclinism inputs are over different fields");
        } else {
          using K = doc_scalar_t<decltype(dl)>;
          if (!(dl.algebra.field() == dr.algebra.field()))
            throw FieldMismatch("isoclinism inputs are over different fields");
          PairData<K> pa = pair_data(dl.algebra);
          PairData<K> pb = pair_data(dr.algebra);
          auto side = [](const PairData<K>& p) {
            return json{{"dim", p.algebra.dim()},
                        {"quotient_dim", p.q()},
                        {"derived_dim", p.d()},
                        {"transversal", matrix_json(p.by_center.transversal)},
                        {"derived_basis", matrix_json(p.derived_embedding)}};
          };
          json results{{"left", side(pa)}, {"right", side(pb)}};

          if (!c.search) {
            if (c.witness.empty())
              throw ParseError("verify mode needs a witness document");
            RawInput raw = load_raw(c.witness);
            cert.input(raw.source, raw.digest);
            IsoclinismWitness<K> w = load_witness_as<K>(raw.j, dl.algebra.field());
            WitnessReport rep = verify_isoclinism(w, pa, pb);
            results["witness"] = witness_json(w);
            results["verification"] = witness_report_json(rep);
            return cert.finish(std::move(results), rep.verdict, rep.verdict ? 0 : 1);
          }

          SearchOptions so;
          so.budget = c.budget;
          so.bound = c.bound;
          so.threads = c.threads;
          auto sr = search_isoclinism(pa, pb, so);
          results["search"] = json{{"examined", sr.examined},
                                   {"finished", sr.finished},
                                   {"complete", sr.complete},
                                   {"found", sr.witness.has_value()}};
          if (sr.witness) {
            WitnessReport rep = verify_isoclinism(*sr.witness, pa, pb);
            results["witness"] = witness_json(*sr.witness);
            results["verification"] = witness_report_json(rep);
            cert.emit(c.output, witness_json(*sr.witness));
            return cert.finish(std::move(results), true, 0);
          }
          if (sr.complete) return cert.finish(std::move(results), false, 1);
          return cert.finish(std::move(results), false, 4);
        }
      },
      lin.doc, rin.doc);
}

CommandResult cmd_decompose(const DecomposeCmd& c) {
  Cert cert("decompose");
  LoadedInput in = load_input(c.input);
  cert.input(in.source, in.digest);
  return std::visit(
      [&](const auto& d) -> CommandResult {
        using K = doc_scalar_t<decltype(d)>;
        const Algebra<K>& a = d.algebra;
        require_pass(a, c.threads);
        Decomposition<K> dec = decompose_stem_abelian(a);
        json stem_doc = algebra_document_json(dec.stem_part.algebra);
        json ab_doc = algebra_document_json(dec.abelian_part.algebra);
        json wit_doc{{"iso", matrix_json(dec.witness)}};
        cert.emit(c.out_stem, stem_doc);
        cert.emit(c.out_abelian, ab_doc);
        cert.emit(c.out_witness, wit_doc);
        bool dims_add =
            dec.stem_part.algebra.dim() + dec.abelian_part.algebra.dim() == a.dim();
        json results{{"stem", json{{"summary", algebra_summary_json(dec.stem_part.algebra)},
                                   {"embedding", matrix_json(dec.stem_part.embedding)}}},
                     {"abelian",
                      json{{"summary", algebra_summary_json(dec.abelian_part.algebra)},
                           {"embedding", matrix_json(dec.abelian_part.embedding)}}},
                     {"witness", matrix_json(dec.witness)},
                     {"dims_add", dims_add},
                     {"verified", dec.stem_verified}};
        bool verdict = dec.stem_verified && dims_add;
        return cert.finish(std::move(results), verdict, verdict ? 0 : 1);
      },
      in.doc);
}

CommandResult cmd_corpus(const CorpusCmd& c) {
  Cert cert("corpus");
  if (c.p != 2 && c.p != 3) throw ParseError("corpus generation supports F2 and F3");
  if (c.dim < 1 || c.dim > 4) throw ParseError("corpus dimension must be 1..4");
  if (c.exhaustive && c.dim != 2)
    throw ParseError("the exhaustive sweep is defined for dimension 2");
  if (c.out_dir.empty()) throw ParseError("corpus generation needs an output directory");

  std::vector<Algebra<Fp>> algebras;
  std::size_t attempts = 0;
  if (c.exhaustive) {
    algebras = exhaustive_dim2(c.p);
  } else {
    CorpusResult r = sample_corpus(c.p, c.dim, c.count, c.seed);
    algebras = std::move(r.algebras);
    attempts = r.attempts;
  }

  std::filesystem::create_directories(c.out_dir);
  json files = json::array();
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "%s%04zu.json", c.exhaustive ? "x" : "c", i);
    std::string path = (std::filesystem::path(c.out_dir) / name).string();
    std::string text = algebra_document_json(algebras[i]).dump(2) + "\n";
    write_file(path, text);
    files.push_back(json{{"name", std::string(name)}, {"digest", fnv1a64_hex(text)}});
  }
  json results{{"field", field_json(Fp::Field{c.p})},
               {"dim", c.dim},
               {"seed", c.seed},
               {"exhaustive", c.exhaustive},
               {"requested", c.exhaustive ? algebras.size() : c.count},
               {"kept", algebras.size()},
               {"attempts", attempts},
               {"files", std::move(files)}};
  bool verdict = c.exhaustive || algebras.size() == c.count;
  return cert.finish(std::move(results), verdict, verdict ? 0 : 1);
}

}  // namespace hlya
