#include <iostream>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2cong/identities.hpp"
#include "sl2cong/numtheory.hpp"
#include "sl2cong/reduction.hpp"
#include "sl2cong/search.hpp"
#include "sl2cong/todd_coxeter.hpp"

using nlohmann::json;
using namespace sl2cong;

namespace {

// exit codes: 0 ok, 1 verification failure, 2 resource bound reached, 3 usage
constexpr int kOk = 0, kFail = 1, kBound = 2, kUsage = 3;

struct Output {
  bool as_json = true;
  void line(const json& j, const std::string& text) const {
    if (as_json)
      std::cout << j.dump() << "\n";
    else
      std::cout << text << "\n";
  }
};

json report_json(const ids::VerificationReport& rep) {
  json j;
  j["name"] = rep.name;
  j["p"] = rep.p;
  j["r"] = rep.r;
  if (rep.k) j["k"] = rep.k;
  j["verdict"] = ids::verdict_name(rep.verdict);
  j["actual"] = rep.actual.str();
  if (rep.consequence_checked) j["consequence_ok"] = rep.consequence_ok;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

int cmd_verify_identities(long long pmax, long long kmax, std::optional<long long> only_p,
                          std::optional<long long> only_r,
                          std::optional<std::string> only_name, const Output& out) {
  auto reports = ids::verify_all(pmax, kmax, only_p, only_name);
  bool any_fail = false;
  for (const auto& rep : reports) {
    if (only_r && rep.r != *only_r) continue;
    any_fail |= rep.verdict == ids::Verdict::fail;
    out.line(report_json(rep),
             rep.name + " p=" + std::to_string(rep.p) + " r=" + std::to_string(rep.r) +
                 (rep.k ? " k=" + std::to_string(rep.k) : "") + ": " +
                 ids::verdict_name(rep.verdict));
  }
  return any_fail ? kFail : kOk;
}

std::map<long long, fp::Presentation> load_presentation_args(
    const std::vector<std::string>& specs) {
  std::map<long long, fp::Presentation> out;
  for (const auto& s : specs) {
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--presentation expects P=FILE");
    long long p = std::stoll(s.substr(0, eq));
    std::ifstream in(s.substr(eq + 1));
    if (!in) throw CLI::ValidationError("cannot open " + s.substr(eq + 1));
    std::stringstream text;
    text << in.rdbuf();
    fp::Presentation pres = fp::load_presentation(text.str());
    if (pres.gens == std::vector<std::string>{"a", "b", "u"})
      fp::sanity_check(pres,
                       SymbolTable{{"a", atom_A()}, {"b", atom_B()}, {"u", atom_U(p)}});
    out.emplace(p, std::move(pres));
  }
  return out;
}

int cmd_index(long long p, long long r, uint64_t max_cosets,
              const std::optional<fp::Presentation>& pres, const Output& out) {
  fp::Presentation bm = pres ? *pres : fp::behr_mennicke(p);
  fp::TCResult res = fp::todd_coxeter(bm, fp::embed_delta(p, r), fp::TCOptions{max_cosets});
  json j;
  j["p"] = p;
  j["r"] = r;
  if (res.complete()) {
    j["index"] = res.index;
    j["jordan2"] = nt::jordan2(uint64_t(r)).str();
    out.line(j, "index " + std::to_string(res.index));
    return kOk;
  }
  j["status"] = "overflow";
  j["max_cosets"] = max_cosets;
  out.line(j, "overflow at " + std::to_string(max_cosets) + " cosets");
  return kBound;
}

int cmd_table1(uint64_t max_cosets,
               const std::map<long long, fp::Presentation>& extra, const Output& out) {
  std::map<long long, const fp::Presentation*> grid;
  static const fp::Presentation bm2 = fp::behr_mennicke(2);
  static const fp::Presentation bm3 = fp::behr_mennicke(3);
  grid[2] = &bm2;
  grid[3] = &bm3;
  for (const auto& [p, pres] : extra) grid[p] = &pres;
  bool mismatch = false, inconclusive = false;
  for (const auto& [p, pres] : grid) {
    long long rmax = std::min<long long>(4 * p - 1, 27);
    for (long long r = 1; r <= rmax; ++r) {
      json j;
      j["p"] = p;
      j["r"] = r;
      if (r % p == 0) {
        // integer ratio: infinite index, the enumeration cannot complete
        fp::TCResult res =
            fp::todd_coxeter(*pres, fp::embed_delta(p, r), fp::TCOptions{max_cosets});
        if (res.complete()) {
          j["index"] = res.index;
          mismatch = true;  // would contradict infinite index
        } else {
          j["status"] = "overflow";
        }
        out.line(j, "p=" + std::to_string(p) + " r=" + std::to_string(r) +
                        ": integer ratio, no finite index");
        continue;
      }
      fp::ConjectureReport rep = fp::verify_conjecture(p, r, max_cosets, pres);
      j["jordan2"] = rep.jordan.str();
      if (rep.tc.complete()) {
        j["index"] = rep.tc.index;
        j["equal"] = rep.equal_gamma1bar;
        mismatch |= !rep.equal_gamma1bar;
      } else {
        j["status"] = "overflow";
        inconclusive = true;
      }
      out.line(j, "p=" + std::to_string(p) + " r=" + std::to_string(r) + ": " +
                      (rep.tc.complete() ? std::to_string(rep.tc.index) : "overflow"));
    }
  }
  if (mismatch) return kFail;
  if (inconclusive) return kBound;
  return kOk;
}

int cmd_search(long long p, long long r, int syll, long long emax, bool strong,
               bool serial, const Output& out) {
  search::SearchBounds b{syll, emax, strong};
  auto found = serial ? search::search_witness_serial(p, r, b)
                      : search::search_witness(p, r, b);
  for (const auto& w : found) {
    json j;
    j["word"] = w.word.str();
    j["shape"] = shape_name(w.cls.shape);
    j["k"] = w.cls.k;
    j["sign"] = w.cls.sign;
    j["strong"] = w.cls.strong();
    out.line(j, w.word.str() + "  [" + shape_name(w.cls.shape) +
                    ", k=" + std::to_string(w.cls.k) + "]");
  }
  return kOk;
}

int cmd_reduce(long long p, long long r, long long k, const std::string& matrix,
               uint64_t bound, const Output& out) {
  std::istringstream in(matrix);
  std::string ea, eb, ec, ed;
  if (!(in >> ea >> eb >> ec >> ed))
    throw CLI::ValidationError("--matrix expects four rationals \"a b c d\"");
  Mat2 m(Rational::parse(ea), Rational::parse(eb), Rational::parse(ec),
         Rational::parse(ed));
  red::ReduceOptions opt;
  opt.search_bound = bound;
  red::ReduceOutcome res = red::reduce_to_word(m, p, r, k, opt);
  json j;
  j["p"] = p;
  j["r"] = r;
  j["k"] = k;
  j["target"] = m.str();
  if (res.ok()) {
    j["word"] = res.certificate->word.str();
    json audit = json::array();
    for (const auto& s : res.certificate->steps)
      audit.push_back({{"rule", s.rule}, {"detail", s.detail}});
    j["audit"] = audit;
    out.line(j, "certificate: " + res.certificate->word.str());
    if (!out.as_json)
      for (const auto& s : res.certificate->steps)
        std::cout << "  " << s.rule << ": " << s.detail << "\n";
    return kOk;
  }
  j["status"] = res.status == red::ReduceOutcome::Status::bound_exceeded
                    ? "bound-exceeded"
                    : "not-in-group";
  j["message"] = res.message;
  json audit = json::array();
  for (const auto& s : res.partial) audit.push_back({{"rule", s.rule}, {"detail", s.detail}});
  j["audit"] = audit;
  out.line(j, j["status"].get<std::string>() + ": " + res.message);
  return res.status == red::ReduceOutcome::Status::bound_exceeded ? kBound : kFail;
}

int cmd_pell(int count, const Output& out) {
  bool bad = false;
  for (int n = 1; n <= count; ++n) {
    search::PellCheck c = search::pell_witness_check(n);
    json j;
    j["n"] = n;
    j["q"] = c.q.str();
    j["a"] = c.a.str();
    j["shape"] = shape_name(c.shape);
    j["triangular"] = c.triangular;
    bad |= !c.triangular;
    out.line(j, "q_" + std::to_string(n) + " = " + c.q.str() + ", a = " + c.a.str() +
                    ", " + shape_name(c.shape));
  }
  return bad ? kFail : kOk;
}

int cmd_diamond(const Output& out) {
  bool bad = false;
  for (const auto& c : search::diamond_checks()) {
    json j;
    j["name"] = c.name;
    j["ok"] = c.ok;
    j["detail"] = c.detail;
    bad |= !c.ok;
    out.line(j, c.name + ": " + (c.ok ? "ok" : "FAILED") + " (" + c.detail + ")");
  }
  return bad ? kFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for two-parabolic congruence subgroups of "
               "SL2(Z[1/p])"};
  app.require_subcommand(1);
  bool text_mode = false;
  app.add_flag("--text", text_mode, "human-readable output instead of JSON lines");

  // jordan
  long long jr = 1;
  auto* jordan = app.add_subcommand("jordan", "Jordan totient J_2(r)");
  jordan->add_option("r", jr, "level")->required()->check(CLI::PositiveNumber);

  // order
  long long op = 2, orr = 1;
  auto* order = app.add_subcommand("order", "multiplicative order of p mod r");
  order->add_option("p", op)->required();
  order->add_option("r", orr)->required()->check(CLI::PositiveNumber);

  // verify-identities
  auto* vi = app.add_subcommand("verify-identities", "check the identity catalog");
  long long vi_pmax = 100, vi_kmax = 3;
  long long vi_p = 0, vi_r = 0;
  std::string vi_name;
  vi->add_option("--pmax", vi_pmax, "verify all primes below this");
  vi->add_option("--kmax", vi_kmax, "parameter cutoff for k-indexed families");
  vi->add_option("--p", vi_p, "restrict to one prime");
  vi->add_option("--r", vi_r, "restrict to templates with this level");
  vi->add_option("--name", vi_name, "restrict to one template");

  // index
  auto* index = app.add_subcommand("index", "coset enumeration for the two-parabolic subgroup");
  long long ip = 0, ir = 0;
  uint64_t imax = 100000;
  std::string ipres;
  index->add_option("--p", ip)->required();
  index->add_option("--r", ir)->required();
  index->add_option("--max-cosets", imax);
  index->add_option("--presentation", ipres, "presentation file (for p outside {2,3})");

  // table1
  auto* table = app.add_subcommand("table1", "index grid over the admissible range");
  uint64_t tmax = 100000;
  std::vector<std::string> tpres;
  table->add_option("--max-cosets", tmax);
  table->add_option("--presentation", tpres, "P=FILE, may repeat");

  // search
  auto* se = app.add_subcommand("search", "bounded triangular-witness search");
  long long sp = 0, sr = 0, semax = 12;
  int ssyll = 7;
  bool sstrong = false, sserial = false;
  se->add_option("--p", sp)->required();
  se->add_option("--r", sr)->required();
  se->add_option("--max-syllables", ssyll);
  se->add_option("--max-exp", semax);
  se->add_flag("--strong", sstrong, "keep only witnesses with diagonal != +-1");
  se->add_flag("--serial", sserial, "use the serial reference enumerator");

  // reduce
  auto* rd = app.add_subcommand("reduce", "certificate for a congruence-subgroup element");
  long long rp = 0, rr = 0, rk = 1;
  uint64_t rbound = 100000;
  std::string rmatrix;
  rd->add_option("--p", rp)->required();
  rd->add_option("--r", rr)->required();
  rd->add_option("--k", rk, "U-generator power (U = U_p^k)");
  rd->add_option("--matrix", rmatrix, "row-major \"a b c d\", rational entries")
      ->required();
  rd->add_option("--bound", rbound, "prime search bound");

  // pell
  auto* pe = app.add_subcommand("pell", "convergent sequence and witness checks");
  int pcount = 6;
  pe->add_option("--count", pcount)->check(CLI::PositiveNumber);

  // diamond
  app.add_subcommand("diamond", "exact checks for the two-unipotent group at 3/2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  Output out{!text_mode};

  try {
    if (jordan->parsed()) {
      std::cout << nt::jordan2(uint64_t(jr)).str() << "\n";
      return kOk;
    }
    if (order->parsed()) {
      std::cout << nt::mult_order(BigInt(op), uint64_t(orr)) << "\n";
      return kOk;
    }
    if (vi->parsed())
      return cmd_verify_identities(
          vi_pmax, vi_kmax, vi_p ? std::optional<long long>(vi_p) : std::nullopt,
          vi_r ? std::optional<long long>(vi_r) : std::nullopt,
          vi_name.empty() ? std::nullopt : std::optional<std::string>(vi_name), out);
    if (index->parsed()) {
      std::optional<fp::Presentation> pres;
      if (!ipres.empty()) {
        std::ifstream in(ipres);
        if (!in) throw CLI::ValidationError("cannot open " + ipres);
        std::stringstream text;
        text << in.rdbuf();
        pres = fp::load_presentation(text.str());
      }
      return cmd_index(ip, ir, imax, pres, out);
    }
    if (table->parsed()) return cmd_table1(tmax, load_presentation_args(tpres), out);
    if (se->parsed()) return cmd_search(sp, sr, ssyll, semax, sstrong, sserial, out);
    if (rd->parsed()) return cmd_reduce(rp, rr, rk, rmatrix, rbound, out);
    if (pe->parsed()) return cmd_pell(pcount, out);
    if (app.get_subcommand("diamond")->parsed()) return cmd_diamond(out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
