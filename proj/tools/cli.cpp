#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "abelsq/abelian.hpp"
#include "abelsq/analysis.hpp"
#include "abelsq/continued_fraction.hpp"
#include "abelsq/discrepancy.hpp"
#include "abelsq/kernels.hpp"
#include "abelsq/parallel.hpp"
#include "abelsq/search.hpp"
#include "abelsq/sturmian.hpp"
#include "abelsq/substitution.hpp"
#include "abelsq/thue_morse.hpp"
#include "abelsq/word_io.hpp"

namespace abelsq::cli {

namespace {

using json = nlohmann::ordered_json;
using QI = QuadraticIrrational;

constexpr const char* kSchemaPrefix = "abelsq.";
constexpr const char* kSchemaVersion = "/1";

// Bad input that passed the option parser.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "csv";
  std::string output;
  int precision = 6;
  unsigned threads = 1;
  std::string isa = "auto";
};

double rounded(long double v, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return std::stod(os.str());
}

json exact(const QI& x) { return json::array({x.p(), x.q(), x.r(), x.d()}); }

json schema_doc(const std::string& name) {
  json doc;
  doc["schema"] = std::string(kSchemaPrefix) + name + kSchemaVersion;
  return doc;
}

json angle_info(const std::string& text, const QI& alpha, int precision) {
  json j;
  j["text"] = text;
  j["exact"] = exact(alpha);
  j["value"] = rounded(alpha.to_long_double(), precision);
  if (!alpha.is_rational()) j["cf"] = cf_expand(alpha).str();
  return j;
}

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_null()) return s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array()) {
    s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + csv_cell(v[i]);
    s += ")";
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return s;
}

void emit(const Global& g, const json& doc, const std::vector<std::string>& columns, std::ostream& out) {
  if (g.format == "json") {
    out << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& row : doc.at("rows")) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << (row.contains(columns[c]) ? csv_cell(row[columns[c]]) : "");
    }
    out << '\n';
  }
}

QI parse_angle(const std::string& text) {
  try {
    return parse_quadratic(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid angle '" + text + "': " + e.what());
  }
}

Word read_single_word(const std::string& path) {
  std::vector<Word> words;
  if (path == "-") {
    words = read_words(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    words = read_words(in);
  }
  if (words.size() != 1) throw UsageError(path + " must hold exactly one word, found " + std::to_string(words.size()));
  return words.front();
}

Word fibonacci_prefix(std::size_t len) { return fixed_point_prefix(FixedPointSpec(Substitution::fibonacci(), 0), len); }

SturmianSpec sturmian_spec(const std::string& angle, const std::string& rho, const std::string& convention) {
  SturmianSpec spec;
  spec.angle = parse_angle(angle);
  spec.start = rho == "angle" ? spec.angle : parse_angle(rho);
  spec.convention = convention == "right" ? Convention::right : Convention::left;
  spec.validate();
  return spec;
}

kernels::Isa parse_isa(const std::string& name) {
  for (auto isa : {kernels::Isa::scalar, kernels::Isa::avx2, kernels::Isa::neon}) {
    if (kernels::isa_name(isa) == name) return isa;
  }
  throw UsageError("unknown ISA " + name);
}

std::map<std::size_t, std::size_t> parse_budget(const std::vector<std::string>& items,
                                                std::map<std::size_t, std::size_t> budget) {
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("budget syntax is sigma:length, got " + item);
    try {
      budget[std::stoul(item.substr(0, colon))] = std::stoul(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw UsageError("budget syntax is sigma:length, got " + item);
    }
  }
  return budget;
}

json search_record(const SearchResult& r, bool canonical) {
  json j;
  j["sigma"] = r.sigma;
  j["length"] = r.length;
  j["objective"] = objective_name(r.objective);
  j["canonical"] = canonical;
  j["maximum"] = r.maximum;
  j["witness_count"] = r.witness_count;
  j["witness_cap"] = r.witness_cap;
  j["enumerated"] = r.enumerated;
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back(w.str());
  j["witnesses"] = ws;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abelian-square counting, Sturmian words, discrepancy and exhaustive search", "abelsq"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--output", g.output, "write to a file instead of standard output");
  app.add_option("--precision", g.precision, "decimal digits for approximate values")->check(CLI::Range(1, 30));
  app.add_option("--threads", g.threads, "worker threads, 0 for all cores");
  app.add_option("--isa", g.isa, "kernel variant: auto, scalar, avx2, neon")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  // generate
  auto* gen = app.add_subcommand("generate", "write a word prefix");
  gen->require_subcommand(1);
  bool declare = false;
  gen->add_flag("--declare-alphabet", declare, "emit an #alphabet header");
  std::size_t len = 0;
  auto* gen_tm = gen->add_subcommand("thue-morse", "Thue-Morse word");
  gen_tm->add_option("--len", len)->required()->check(CLI::PositiveNumber);
  auto* gen_sub = gen->add_subcommand("substitution", "fixed point of a substitution file");
  std::string sub_file;
  gen_sub->add_option("--file", sub_file)->required();
  gen_sub->add_option("--len", len)->required()->check(CLI::PositiveNumber);
  auto* gen_st = gen->add_subcommand("sturmian", "rotation coding");
  std::string angle_text, rho_text = "angle", convention = "left";
  gen_st->add_option("--angle", angle_text)->required();
  gen_st->add_option("--rho", rho_text, "initial point, or 'angle'");
  gen_st->add_option("--convention", convention)->check(CLI::IsMember({"left", "right"}));
  gen_st->add_option("--len", len)->required()->check(CLI::PositiveNumber);
  auto* gen_tb = gen->add_subcommand("triple-block", "a^n b a^n b a^n");
  std::size_t block_n = 0;
  gen_tb->add_option("--n", block_n)->required()->check(CLI::PositiveNumber);

  // count
  auto* count = app.add_subcommand("count", "abelian-square factors per length");
  std::string word_file;
  std::optional<std::size_t> max_len;
  bool inequivalent = false;
  count->add_option("file", word_file, "word file, - for standard input")->required();
  count->add_option("--max-len", max_len);
  count->add_flag("--inequivalent", inequivalent, "count Parikh classes instead of factors");

  // sturmian-asf, crosscheck, partition
  std::size_t max_n = 0;
  auto* sasf = app.add_subcommand("sturmian-asf", "arithmetic ASF counts of a Sturmian angle");
  sasf->add_option("--angle", angle_text)->required();
  sasf->add_option("--max-n", max_n)->required();
  auto* cross = app.add_subcommand("crosscheck", "arithmetic against combinatorial counts");
  std::size_t prefix_len = 10000;
  cross->add_option("--angle", angle_text)->required();
  cross->add_option("--max-n", max_n)->required();
  cross->add_option("--prefix-len", prefix_len);
  auto* part = app.add_subcommand("partition", "interval partition by the points {-i*angle}");
  std::size_t part_n = 0;
  part->add_option("--angle", angle_text)->required();
  part->add_option("--n", part_n)->required()->check(CLI::PositiveNumber);

  // discrepancy, certificate
  auto* disc = app.add_subcommand("discrepancy", "discrepancy of ({n*angle}) against the log bound");
  std::vector<std::size_t> big_ns;
  disc->add_option("--angle", angle_text)->required();
  disc->add_option("--N", big_ns)->required()->check(CLI::PositiveNumber);
  auto* cert = app.add_subcommand("certificate", "quadratic lower-bound certificate");
  std::vector<std::size_t> ns;
  cert->add_option("--angle", angle_text)->required();
  auto* cert_n = cert->add_option("--n", ns, "even lengths");
  auto* cert_max = cert->add_option("--max-n", max_n, "every even length up to this");
  cert_n->excludes(cert_max);

  // richness, random-baseline
  auto* rich = app.add_subcommand("richness", "richness statistics from a prefix");
  std::string source = "thue-morse";
  rich->add_option("--source", source)->check(CLI::IsMember({"thue-morse", "fibonacci", "sturmian", "file"}));
  rich->add_option("--angle", angle_text, "for --source sturmian");
  rich->add_option("--file", word_file, "for --source file");
  std::size_t rich_prefix = 4096;
  rich->add_option("--prefix-len", rich_prefix);
  rich->add_option("--n", ns)->required()->check(CLI::PositiveNumber);
  auto* base = app.add_subcommand("random-baseline", "uniform random binary words");
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  base->add_option("--n", ns)->required()->check(CLI::PositiveNumber);
  base->add_option("--trials", trials)->check(CLI::PositiveNumber);
  base->add_option("--seed", seed);

  // search
  auto* search = app.add_subcommand("search", "exhaustive searches");
  search->require_subcommand(1);
  std::size_t sigma = 2, cap = 64, from = 2, to = 12;
  bool no_canonical = false;
  std::string checkpoint, objective_text = "distinct";
  std::vector<std::string> budget_items;
  search->add_option("--cap", cap, "witnesses kept");
  search->add_flag("--no-canonical", no_canonical, "enumerate every word");
  search->add_option("--checkpoint", checkpoint, "JSON-lines shard log");
  search->add_option("--budget", budget_items, "sigma:length overrides");
  auto* s_asf = search->add_subcommand("max-asf", "maximum distinct abelian squares");
  auto* s_ineq = search->add_subcommand("max-inequivalent", "maximum inequivalent abelian squares");
  for (auto* s : {s_asf, s_ineq}) {
    s->add_option("--sigma", sigma);
    s->add_option("--len", len)->required()->check(CLI::PositiveNumber);
  }
  auto* s_cmp = search->add_subcommand("compare-alphabets", "binary maximum against larger alphabets");
  s_cmp->add_option("--len", len)->required()->check(CLI::PositiveNumber);
  auto* s_growth = search->add_subcommand("growth", "maxima over a range of lengths");
  s_growth->add_option("--sigma", sigma);
  s_growth->add_option("--from", from)->check(CLI::PositiveNumber);
  s_growth->add_option("--to", to)->check(CLI::PositiveNumber);
  s_growth->add_option("--objective", objective_text)->check(CLI::IsMember({"distinct", "inequivalent"}));
  for (auto* s : {gen, count, sasf, cross, part, disc, cert, rich, base, search, s_asf, s_ineq, s_cmp, s_growth,
                  gen_tm, gen_sub, gen_st, gen_tb}) {
    s->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream buffer;
  std::ostream& sink = g.output.empty() ? out : buffer;
  int status = kOk;
  try {
    if (g.isa != "auto") kernels::set_active_isa(parse_isa(g.isa));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) {
      Word w;
      if (*gen_tm) {
        w = thue_morse_prefix(len);
      } else if (*gen_sub) {
        std::ifstream in(sub_file);
        if (!in) throw UsageError("cannot read " + sub_file);
        w = fixed_point_prefix(read_substitution(in), len);
      } else if (*gen_st) {
        w = sturmian_prefix(sturmian_spec(angle_text, rho_text, convention), len);
      } else {
        w = triple_block_word(block_n);
      }
      write_words(sink, std::span<const Word>(&w, 1), declare);
    } else if (*count) {
      const Word w = read_single_word(word_file);
      const std::size_t limit = max_len.value_or(w.size());
      if (limit > w.size()) throw UsageError("--max-len exceeds the word length " + std::to_string(w.size()));
      const FactorIndex index(w);
      const CountOptions opts{g.threads};
      json doc = schema_doc("count");
      doc["objective"] = inequivalent ? "inequivalent" : "distinct";
      doc["word_length"] = w.size();
      doc["max_length"] = limit;
      std::vector<std::uint64_t> by_half;
      std::uint64_t total = 0;
      if (inequivalent) {
        const auto p = inequivalent_profile(index, limit, opts);
        by_half = p.by_half;
        total = p.total;
      } else {
        const auto p = asf_profile(index, limit, opts);
        by_half = p.by_half;
        total = p.total;
      }
      doc["total"] = total;
      json rows = json::array();
      for (std::size_t h = 1; h < by_half.size(); ++h) rows.push_back({{"length", 2 * h}, {"count", by_half[h]}});
      doc["rows"] = rows;
      emit(g, doc, {"length", "count"}, sink);
    } else if (*sasf) {
      const QI alpha = parse_angle(angle_text);
      const auto table = asf_arith_table(alpha, max_n);
      json doc = schema_doc("sturmian-asf");
      doc["angle"] = angle_info(angle_text, alpha, g.precision);
      json rows = json::array();
      for (std::size_t h = 1; h < table.size(); ++h) rows.push_back({{"n", 2 * h}, {"asf", table[h]}});
      doc["rows"] = rows;
      emit(g, doc, {"n", "asf"}, sink);
    } else if (*cross) {
      const QI alpha = parse_angle(angle_text);
      if (max_n > prefix_len) throw UsageError("--max-n exceeds --prefix-len");
      SturmianSpec spec;
      spec.angle = alpha;
      spec.start = alpha;
      const auto table = asf_arith_table(alpha, max_n);
      const FactorIndex index(sturmian_prefix(spec, prefix_len));
      json doc = schema_doc("crosscheck");
      doc["angle"] = angle_info(angle_text, alpha, g.precision);
      doc["prefix_length"] = prefix_len;
      json rows = json::array();
      bool all = true;
      for (std::size_t h = 1; h < table.size(); ++h) {
        const std::size_t n = 2 * h;
        // The prefix only speaks for length n if it already shows all n+1 factors.
        const bool adequate = index.distinct_count(n) == n + 1;
        const std::uint64_t comb = index.abelian_square_count(n);
        const bool match = adequate && comb == table[h];
        all = all && match;
        rows.push_back({{"n", n}, {"arithmetic", table[h]}, {"combinatorial", comb}, {"adequate", adequate}, {"match", match}});
      }
      doc["all_match"] = all;
      doc["rows"] = rows;
      emit(g, doc, {"n", "arithmetic", "combinatorial", "adequate", "match"}, sink);
      if (!all) status = kVerificationFailed;
    } else if (*part) {
      const QI alpha = parse_angle(angle_text);
      const auto partition = interval_partition(alpha, part_n);
      const auto classes = classify_parikh(partition, alpha);
      json doc = schema_doc("partition");
      doc["angle"] = angle_info(angle_text, alpha, g.precision);
      doc["n"] = part_n;
      doc["threshold"] = rounded(partition.threshold.to_long_double(), g.precision);
      doc["threshold_exact"] = exact(partition.threshold);
      json rows = json::array();
      for (std::size_t k = 0; k < partition.intervals.size(); ++k) {
        const auto& iv = partition.intervals[k];
        rows.push_back({{"index", k},
                        {"lower", rounded(iv.lower.to_long_double(), g.precision)},
                        {"upper", rounded(iv.upper.to_long_double(), g.precision)},
                        {"lower_exact", exact(iv.lower)},
                        {"upper_exact", exact(iv.upper)},
                        {"factor", iv.factor.str()},
                        {"count_a", classes[k].counts[0]},
                        {"count_b", classes[k].counts[1]},
                        {"heavy", iv.heavy}});
      }
      doc["rows"] = rows;
      emit(g, doc, {"index", "lower", "upper", "factor", "count_a", "count_b", "heavy", "lower_exact", "upper_exact"},
           sink);
    } else if (*disc) {
      const QI alpha = parse_angle(angle_text);
      json doc = schema_doc("discrepancy");
      doc["angle"] = angle_info(angle_text, alpha, g.precision);
      json rows = json::array();
      std::vector<DiscrepancyReport> reports(big_ns.size());
      parallel_for(big_ns.size(), g.threads, [&](std::size_t k) { reports[k] = check_kn2(alpha, big_ns[k]); });
      bool all = true;
      for (const auto& r : reports) {
        all = all && r.check_kn2;
        rows.push_back({{"N", r.N},
                        {"D", rounded(r.D.to_long_double(), g.precision)},
                        {"N_D", rounded(static_cast<long double>(r.N) * r.D.to_long_double(), g.precision)},
                        {"K", r.K},
                        {"bound", rounded(*r.bound, g.precision)},
                        {"check_kn2", r.check_kn2},
                        {"witness", r.witness.str(g.precision)},
                        {"D_exact", exact(r.D)}});
      }
      doc["rows"] = rows;
      emit(g, doc, {"N", "D", "N_D", "K", "bound", "check_kn2", "witness", "D_exact"}, sink);
      if (!all) status = kVerificationFailed;
    } else if (*cert) {
      const QI alpha = parse_angle(angle_text);
      std::vector<CertificateReport> reports;
      if (*cert_max) {
        if (max_n < 2) throw UsageError("--max-n must be at least 2");
        reports = theorem4_certificates(alpha, max_n);
      } else if (!ns.empty()) {
        for (auto n : ns) reports.push_back(theorem4_certificate(alpha, n));
      } else {
        throw UsageError("certificate needs --n or --max-n");
      }
      json doc = schema_doc("certificate");
      doc["angle"] = angle_info(angle_text, alpha, g.precision);
      json rows = json::array();
      bool all = true;
      for (const auto& c : reports) {
        all = all && c.holds();
        rows.push_back({{"n", c.n},
                        {"count_A", c.count_A},
                        {"count_B", c.count_B},
                        {"product", c.product},
                        {"asf_sum", c.asf_sum},
                        {"holds", c.holds()}});
      }
      doc["rows"] = rows;
      emit(g, doc, {"n", "count_A", "count_B", "product", "asf_sum", "holds"}, sink);
      if (!all) status = kVerificationFailed;
    } else if (*rich) {
      Word prefix;
      if (source == "thue-morse") {
        prefix = thue_morse_prefix(rich_prefix);
      } else if (source == "fibonacci") {
        prefix = fibonacci_prefix(rich_prefix);
      } else if (source == "sturmian") {
        if (angle_text.empty()) throw UsageError("--source sturmian needs --angle");
        prefix = sturmian_prefix(sturmian_spec(angle_text, "angle", "left"), rich_prefix);
      } else {
        if (word_file.empty()) throw UsageError("--source file needs --file");
        prefix = read_single_word(word_file);
      }
      const auto report = richness_report(prefix, ns, g.threads);
      json doc = schema_doc("richness");
      doc["source"] = source;
      doc["prefix_length"] = prefix.size();
      doc["C_avg"] = rounded(report.C_avg, g.precision);
      doc["C_min"] = rounded(report.C_min, g.precision);
      doc["recurrence_quotient_estimate"] = rounded(report.recurrence_quotient_estimate, g.precision);
      json rows = json::array();
      for (const auto& r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"factors", r.factors},
                        {"asf_sum", r.asf_sum},
                        {"avg", rounded(r.avg(), g.precision)},
                        {"min", r.asf_min},
                        {"avg_ratio", rounded(r.avg_ratio(), g.precision)},
                        {"min_ratio", rounded(r.min_ratio(), g.precision)},
                        {"recurrence", r.recurrence}});
      }
      doc["rows"] = rows;
      emit(g, doc, {"n", "factors", "asf_sum", "avg", "min", "avg_ratio", "min_ratio", "recurrence"}, sink);
    } else if (*base) {
      const auto report = random_baseline(ns, trials, seed, g.threads);
      json doc = schema_doc("random-baseline");
      doc["seed"] = seed;
      doc["generator"] = "mt19937_64";
      doc["exponent"] = rounded(report.exponent, g.precision);
      json rows = json::array();
      for (const auto& r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"trials", r.trials},
                        {"mean", rounded(r.mean, g.precision)},
                        {"stddev", rounded(r.stddev, g.precision)},
                        {"exponent", rounded(report.exponent, g.precision)}});
      }
      doc["rows"] = rows;
      emit(g, doc, {"n", "trials", "mean", "stddev", "exponent"}, sink);
    } else if (*search) {
      SearchOptions opts;
      opts.canonical = !no_canonical;
      opts.threads = g.threads;
      opts.witness_cap = cap;
      opts.checkpoint_path = checkpoint;
      opts.budget = parse_budget(budget_items, opts.budget);
      const auto started = std::chrono::steady_clock::now();
      if (*s_asf || *s_ineq) {
        const auto r = *s_asf ? max_asf(sigma, len, opts) : max_inequivalent(sigma, len, opts);
        json doc = schema_doc("search");
        doc.update(search_record(r, opts.canonical));
        json rows = json::array();
        for (const auto& w : r.witnesses) {
          rows.push_back({{"sigma", r.sigma},
                          {"length", r.length},
                          {"objective", objective_name(r.objective)},
                          {"maximum", r.maximum},
                          {"witness_count", r.witness_count},
                          {"enumerated", r.enumerated},
                          {"witness", w.str()}});
        }
        doc["rows"] = rows;
        emit(g, doc, {"sigma", "length", "objective", "maximum", "witness_count", "enumerated", "witness"}, sink);
      } else if (*s_cmp) {
        const auto cmp = compare_alphabets(len, opts);
        json doc = schema_doc("compare-alphabets");
        doc["length"] = len;
        doc["binary_max_ge_larger"] = cmp.binary_max_ge_larger;
        json rows = json::array();
        for (const auto& r : cmp.results) {
          json row = search_record(r, opts.canonical);
          row["first_witness"] = r.witnesses.empty() ? std::string() : r.witnesses.front().str();
          rows.push_back(row);
        }
        doc["rows"] = rows;
        emit(g, doc, {"sigma", "length", "maximum", "witness_count", "enumerated", "first_witness"}, sink);
      } else {
        if (from > to) throw UsageError("--from exceeds --to");
        const Objective objective =
            objective_text == "distinct" ? Objective::distinct_asf_total : Objective::inequivalent_total;
        json doc = schema_doc("search-growth");
        doc["sigma"] = sigma;
        doc["objective"] = objective_name(objective);
        json rows = json::array();
        std::vector<double> xs, ys;
        for (std::size_t L = from; L <= to; ++L) {
          const auto r = exhaustive_search(sigma, L, objective, opts);
          rows.push_back({{"length", L},
                          {"maximum", r.maximum},
                          {"witness_count", r.witness_count},
                          {"enumerated", r.enumerated},
                          {"first_witness", r.witnesses.empty() ? std::string() : r.witnesses.front().str()}});
          if (r.maximum > 0) {
            xs.push_back(static_cast<double>(L));
            ys.push_back(static_cast<double>(r.maximum));
          }
        }
        if (xs.size() >= 2) doc["exponent"] = rounded(loglog_slope(xs, ys), g.precision);
        doc["rows"] = rows;
        emit(g, doc, {"length", "maximum", "witness_count", "enumerated", "first_witness"}, sink);
      }
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
      err << "elapsed_ms " << ms << '\n';
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InadequatePrefix& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (!g.output.empty()) {
    std::ofstream file(g.output);
    if (!file) {
      err << "error: cannot write " << g.output << '\n';
      return kUsage;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace abelsq::cli
