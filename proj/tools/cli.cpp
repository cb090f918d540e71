#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "ringcodes/ringcodes.hpp"

namespace ringcodes::cli {

namespace {

using io::json;

struct Inputs {
  std::string file = "-";
  unsigned workers = 1;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  buf << f.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

EnumerationOptions enumeration(const Inputs& inputs) { return {default_enumeration_cap(), inputs.workers}; }

/// Minimum distance with the zero code mapped to n + 1.
std::size_t distance_or_sentinel(const LinearCode& code, const EnumerationOptions& opts) {
  if (code.rank() == 0) return code.length() + 1;
  return min_distance(weight_distribution(code, opts));
}

KnownWeights parse_known(const std::string& spec) {
  KnownWeights out;
  std::istringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--known entries look like i=v, got \"" + item + "\"");
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(item.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument("index");
    } catch (const std::exception&) {
      throw ParseError("bad index in --known entry \"" + item + "\"");
    }
    const auto value = io::bigint_from_json(item.substr(eq + 1));
    if (!out.emplace(index, value).second) throw ParseError("index " + std::to_string(index) + " given twice");
  }
  return out;
}

json rational_json(const Rational& r) { return to_decimal(r); }

void emit(std::ostream& out, const json& j) { out << (j.is_array() ? j.dump() : j.dump(2)) << '\n'; }

struct NuSelection {
  std::size_t nu = 0;
  bool all = false;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear codes over finite chain rings: construction, enumeration and weight identities", "ringcodes"};
  app.require_subcommand(1);

  Inputs inputs;
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("file", inputs.file, "Code file (JSON); '-' or omitted reads standard input");
    sub->add_option("--workers", inputs.workers, "Worker threads for enumeration and subset loops")
        ->check(CLI::Range(1U, 256U));
  };

  auto* stdform = app.add_subcommand("stdform", "Standard form, type and column permutation");
  add_inputs(stdform);
  auto* paritycheck = app.add_subcommand("paritycheck", "Parity-check matrix");
  add_inputs(paritycheck);
  auto* dual_cmd = app.add_subcommand("dual", "Dual code as a code document");
  add_inputs(dual_cmd);
  auto* card = app.add_subcommand("card", "Cardinality and type");
  add_inputs(card);

  auto* wdist = app.add_subcommand("wdist", "Weight distribution");
  add_inputs(wdist);
  std::string method = "enumerate";
  std::string known_spec;
  std::size_t d = 0, d_dual = 0;
  wdist->add_option("--method", method)->check(CLI::IsMember({"enumerate", "solve", "mds"}));
  wdist->add_option("--known", known_spec, "Known weights for --method solve, e.g. \"2=248,3=0\"");
  auto* wdist_d = wdist->add_option("--d", d, "Minimum distance (fills A_1..A_{d-1} = 0)");
  auto* wdist_dd = wdist->add_option("--d-dual", d_dual, "Dual distance; enumerated from the dual when omitted");

  auto* mac = app.add_subcommand("mac", "MacWilliams transform of a distribution or of a code's distribution");
  add_inputs(mac);
  unsigned mac_p = 0, mac_s = 0;
  std::string mac_card;
  auto* mac_p_opt = mac->add_option("--p", mac_p, "Residue characteristic, for a bare array input");
  auto* mac_s_opt = mac->add_option("--s", mac_s, "Nilpotency index, for a bare array input");
  auto* mac_card_opt = mac->add_option("--cardinality", mac_card, "|C| (defaults to the sum of the distribution)");

  auto* check = app.add_subcommand("check", "Check a weight identity on a code");
  add_inputs(check);
  std::string identity;
  NuSelection nus;
  check->add_option("--identity", identity)
      ->required()
      ->check(CLI::IsMember({"new", "pless", "power", "doublecount", "subtypes"}));
  auto* nu_opt = check->add_option("--nu", nus.nu);
  auto* all_opt = check->add_flag("--all-nu", nus.all, "Every nu where the identity applies");
  nu_opt->excludes(all_opt);
  auto* check_dd = check->add_option("--d-dual", d_dual, "Dual distance; enumerated from the dual when omitted");

  auto* classify_cmd = app.add_subcommand("classify", "Singleton defects and MDS/MDR/AMDR class");
  add_inputs(classify_cmd);
  auto* classify_d = classify_cmd->add_option("--d", d);
  auto* classify_dd = classify_cmd->add_option("--d-dual", d_dual);

  auto* random = app.add_subcommand("random", "Seeded random code");
  unsigned rp = 2, rs = 2;
  std::size_t rn = 4, rrows = 2;
  std::uint64_t seed = 0;
  std::string backend = "int";
  random->add_option("--p", rp)->required();
  random->add_option("--s", rs)->required();
  random->add_option("--n", rn)->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  random->add_option("--rows", rrows)->required();
  random->add_option("--seed", seed);
  random->add_option("--backend", backend)->check(CLI::IsMember({"int", "poly"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto load_code = [&] { return io::to_code(io::parse_code_document(read_text(inputs.file, in))); };
  auto dual_distance = [&](const LinearCode& code, const CLI::Option* given) {
    return given->count() ? d_dual : distance_or_sentinel(dual(code), enumeration(inputs));
  };

  try {
    if (stdform->parsed()) {
      const auto code = load_code();
      const auto& sf = code.standard_form();
      json j;
      j["ring"] = io::ring_to_json(code.ring());
      j["n"] = code.length();
      j["profile"] = io::profile_to_json(sf.profile);
      j["row_levels"] = sf.row_levels;
      j["permutation"] = io::permutation_to_json(sf.permutation);
      j["standard_form"] = io::matrix_to_json(sf.reduced);
      emit(out, j);
    } else if (paritycheck->parsed()) {
      const auto code = load_code();
      json j;
      j["ring"] = io::ring_to_json(code.ring());
      j["n"] = code.length();
      j["parity_check"] = io::matrix_to_json(code.parity_check());
      emit(out, j);
    } else if (dual_cmd->parsed()) {
      emit(out, io::to_json(io::describe_code(dual(load_code()))));
    } else if (card->parsed()) {
      const auto code = load_code();
      json j;
      j["cardinality"] = io::bigint_to_json(code.cardinality());
      j["profile"] = io::profile_to_json(code.profile());
      j["rank"] = code.rank();
      j["free_rank"] = code.free_rank();
      emit(out, j);
    } else if (wdist->parsed()) {
      const auto code = load_code();
      if (method == "enumerate") {
        emit(out, io::distribution_to_json(weight_distribution(code, enumeration(inputs))));
      } else if (method == "mds") {
        if (!code.is_free()) throw InvalidArgument("--method mds needs a free code");
        emit(out, io::distribution_to_json(
                      mds_distribution(code.length(), code.rank(), code.ring().p(), code.ring().s())));
      } else {
        const auto ctx = IdentityContext::of(code, wdist_d->count() ? std::optional{d} : std::nullopt,
                                             dual_distance(code, wdist_dd));
        emit(out, io::distribution_to_json(solve_distribution(ctx, parse_known(known_spec))));
      }
    } else if (mac->parsed()) {
      const auto j = parse_json(read_text(inputs.file, in));
      std::optional<WeightDistribution> a;
      if (j.is_object() && j.contains("generators")) {
        a = weight_distribution(io::to_code(io::parse_code_document(j)), enumeration(inputs));
      } else {
        std::vector<BigInt> counts;
        DistributionContext ctx;
        if (j.is_object()) {
          const auto ring = io::ring_from_json(j.at("ring"));
          ctx.p = ring.p();
          ctx.s = ring.s();
          if (!j.contains("distribution")) throw ParseError("expected a \"distribution\" field");
          counts = io::distribution_from_json(j.at("distribution"));
          if (j.contains("cardinality")) ctx.cardinality = io::bigint_from_json(j.at("cardinality"));
        } else {
          if (!mac_p_opt->count() || !mac_s_opt->count())
            throw InvalidArgument("a bare distribution needs --p and --s");
          ChainRing ring(mac_p, mac_s);
          ctx.p = ring.p();
          ctx.s = ring.s();
          counts = io::distribution_from_json(j);
        }
        if (mac_card_opt->count()) ctx.cardinality = io::bigint_from_json(json(mac_card));
        if (ctx.cardinality == 0)
          for (const auto& c : counts) ctx.cardinality += c;
        a.emplace(ctx, std::move(counts));
      }
      emit(out, io::distribution_to_json(macwilliams_transform(*a)));
    } else if (check->parsed()) {
      if (!nu_opt->count() && !nus.all) throw InvalidArgument("check needs --nu N or --all-nu");
      const auto code = load_code();
      const auto n = code.length();
      const auto opts = enumeration(inputs);
      json results = json::array();
      bool violated = false;
      json report;
      report["identity"] = identity;

      if (identity == "new" || identity == "subtypes") {
        const auto dd = dual_distance(code, check_dd);
        report["d_dual"] = dd;
        const std::size_t first = nus.all ? (dd > n ? 0 : n - dd + 1) : nus.nu;
        const std::size_t last = nus.all ? n : nus.nu;
        if (identity == "new") {
          const auto a = weight_distribution(code, opts);
          for (std::size_t nu = first; nu <= last; ++nu) {
            const auto r = check_new_relation(a, nu, dd);
            violated |= r.required && !r.holds;
            results.push_back({{"nu", nu},
                               {"lhs", io::bigint_to_json(r.lhs)},
                               {"rhs", rational_json(r.rhs)},
                               {"difference", rational_json(r.difference())},
                               {"holds", r.holds},
                               {"required", r.required}});
          }
        } else {
          const auto& h = code.parity_check();
          const auto expected = dual_type(code.profile(), n);
          report["expected_type"] = io::profile_to_json(expected);
          for (std::size_t nu = std::max<std::size_t>(first, 1); nu <= last; ++nu) {
            const auto counts = count_submatrix_types(h, nu, {.workers = inputs.workers});
            json types = json::array();
            for (const auto& [type, count] : counts)
              types.push_back({{"type", io::profile_to_json(type)}, {"count", std::to_string(count)}});
            const bool required = nu + dd > n;
            const bool holds = counts.size() == 1 && counts.begin()->first == expected;
            violated |= required && !holds;
            results.push_back({{"nu", nu}, {"types", types}, {"holds", holds}, {"required", required}});
          }
        }
      } else if (identity == "pless" || identity == "power") {
        const auto a = weight_distribution(code, opts);
        std::optional<WeightDistribution> b;
        std::size_t last = nus.nu, first = nus.nu;
        if (identity == "pless") {
          const auto dd = dual_distance(code, check_dd);
          report["d_dual"] = dd;
          if (nus.all) {
            first = 0;
            last = std::min(dd, n + 1) - 1;
          }
          for (std::size_t nu = first; nu <= last; ++nu) {
            const auto m = pless_moment(a, nu, dd);
            violated |= !m.holds;
            results.push_back(
                {{"nu", nu}, {"lhs", io::bigint_to_json(m.lhs)}, {"rhs", rational_json(m.rhs)}, {"holds", m.holds}});
          }
        } else {
          b = weight_distribution(dual(code), opts);
          if (nus.all) {
            first = 0;
            last = n;
          }
          for (std::size_t nu = first; nu <= last; ++nu) {
            const auto m = power_moment(a, *b, nu);
            violated |= !m.holds;
            results.push_back(
                {{"nu", nu}, {"lhs", io::bigint_to_json(m.lhs)}, {"rhs", rational_json(m.rhs)}, {"holds", m.holds}});
          }
        }
      } else {
        const auto a = weight_distribution(code, opts);
        const std::size_t first = nus.all ? 0 : nus.nu;
        const std::size_t last = nus.all ? n : nus.nu;
        for (std::size_t nu = first; nu <= last; ++nu) {
          const auto dc = double_count_check(code, nu, a, {.workers = inputs.workers});
          violated |= !dc.holds();
          results.push_back({{"nu", nu},
                             {"kernel_sum", io::bigint_to_json(dc.kernel_sum)},
                             {"weighted_sum", io::bigint_to_json(dc.weighted_sum)},
                             {"holds", dc.holds()}});
        }
      }
      report["results"] = results;
      report["holds"] = !violated;
      emit(out, report);
      return violated ? kIdentityViolation : kOk;
    } else if (classify_cmd->parsed()) {
      const auto code = load_code();
      const auto dist = classify_d->count() ? d : distance_or_sentinel(code, enumeration(inputs));
      const auto p = classify(code, dist, dual_distance(code, classify_dd));
      json j;
      j["n"] = code.length();
      j["rank"] = code.rank();
      j["free_rank"] = code.free_rank();
      j["d"] = p.d;
      j["d_dual"] = p.d_dual;
      j["defect"] = p.defect;
      j["dual_defect"] = p.dual_defect;
      j["sigma"] = p.sigma;
      j["class"] = std::string(class_name(p.code_class));
      emit(out, j);
    } else if (random->parsed()) {
      const ChainRing ring(rp, rs, parse_backend(backend));
      std::mt19937_64 rng(seed);
      std::vector<std::vector<std::uint64_t>> rows(rrows, std::vector<std::uint64_t>(rn));
      for (auto& row : rows)
        for (auto& x : row) x = rng() % ring.size();
      auto doc = io::describe_code(LinearCode::from_generators(ring, rn, rows), "random");
      doc.extra["seed"] = seed;
      emit(out, io::to_json(doc));
    }
    return kOk;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InconsistentInputs& e) {
    err << "inconsistent inputs: " << e.what() << '\n';
    return kIdentityViolation;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kIdentityViolation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Underdetermined& e) {
    err << "underdetermined: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ringcodes::cli
