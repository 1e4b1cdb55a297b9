// Command-line front end: character tables, basic sets, block listings and
// verification reports as JSON, CSV or plain text.
//
// Exit codes: 0 success, 1 usage or internal error, 2 a resource bound was
// exceeded, 3 a verification failed.

#include "charbasis/basic_set.hpp"
#include "charbasis/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace charbasis;
using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kError = 1, kResource = 2, kFailed = 3 };

struct Options {
  std::string format = "json";
  std::string out;
  std::string cache;
  unsigned jobs = 1;
  std::optional<int> n_max;
  std::optional<int> w_max;
  bool timings = false;

  std::string group;
  std::string claim;
  std::optional<int> n;
  std::string n_range;
  std::string w_range;
  std::string partition;
  std::string candidate;

  Limits limits() const {
    Limits l;
    if (n_max) l.sym_n_max = l.alt_n_max = *n_max;
    if (w_max) l.w_max = *w_max;
    return l;
  }
};

/// "1..8", "5" or "1,3,5".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto dots = item.find("..");
    try {
      std::size_t used = 0;
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
        continue;
      }
      const int lo = std::stoi(item.substr(0, dots));
      const int hi = std::stoi(item.substr(dots + 2));
      if (lo > hi) throw std::invalid_argument(item);
      for (int k = lo; k <= hi; ++k) out.push_back(k);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed range '" + text + "' (expected a..b, a single value or a list)");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty range");
  return out;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + opt.out);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string cache_dir(const Options& opt) {
  if (!opt.cache.empty()) return opt.cache;
  if (const char* env = std::getenv("CHARBASIS_CACHE")) return env;
  return {};
}

std::string version_hash() {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : std::string(CHARBASIS_VERSION)) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

CharacterTable cached_symmetric_table(int n, const Options& opt) {
  const int bound = opt.n_max.value_or(kDefaultTableMax);
  const std::string dir = cache_dir(opt);
  if (dir.empty()) return character_table(n, bound);
  if (n > bound) return character_table(n, bound);  // throws the bound error
  const auto path = std::filesystem::path(dir) / ("sn-" + std::to_string(n) + "-" + version_hash() + ".json");
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    try {
      const CharacterTable t = table_from_json(json::parse(in));
      if (t.n == n) return t;
    } catch (const std::exception&) {
      // unreadable entry: recompute and overwrite
    }
  }
  CharacterTable t = character_table(n, bound);
  std::filesystem::create_directories(dir);
  std::ofstream(path, std::ios::binary) << table_to_json(t).dump();
  return t;
}

std::string pretty_symmetric(const CharacterTable& t) {
  std::vector<std::vector<std::string>> cells{{""}};
  for (const auto& c : t.classes) cells[0].push_back(to_text(c));
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    cells.push_back({to_text(t.labels[i])});
    for (Eigen::Index c = 0; c < t.values.cols(); ++c)
      cells.back().push_back(t.values(static_cast<Eigen::Index>(i), c).get_str());
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
    out << '\n';
  }
  return out.str();
}

int cmd_table(const Options& opt) {
  const int n = opt.n.value();
  if (opt.group == "sn") {
    const CharacterTable t = cached_symmetric_table(n, opt);
    if (opt.format == "csv") emit(opt, table_to_csv(t));
    else if (opt.format == "pretty") emit(opt, pretty_symmetric(t));
    else emit(opt, dump(table_to_json(t)));
  } else {
    if (n < 2) throw std::invalid_argument("A_n tables need n >= 2");
    const auto table = alt_character_table(n, opt.limits().alt_n_max);
    if (opt.format == "json") emit(opt, dump(table_to_json(table, n)));
    else emit(opt, table_to_csv(table, n));
  }
  return kOk;
}

json quotient_json(const Partition& lambda) {
  const auto q = two_quotient(lambda);
  const auto m = classify_quotient(q.quotient);
  return {{"partition", to_text(lambda)},
          {"conjugate", to_text(conjugate(lambda))},
          {"core", to_text(q.core)},
          {"weight", q.weight},
          {"quotient", {to_text(q.quotient.first), to_text(q.quotient.second)}},
          {"selected", m.member},
          {"branch", to_string(m.branch)}};
}

int cmd_basicset(const Options& opt) {
  const int n = opt.n.value();
  const Limits limits = opt.limits();
  json doc{{"schema", kSchema}, {"n", n}};
  json members = json::array();
  if (opt.group == "sn") {
    if (n > limits.sym_n_max) throw ResourceLimit("n = " + std::to_string(n) + " exceeds n_max = " + std::to_string(limits.sym_n_max));
    doc["group"] = "S_n";
    for (const auto& lambda : symmetric_basic_set(n)) members.push_back(quotient_json(lambda));
  } else {
    if (n < 2) throw std::invalid_argument("A_n basic sets need n >= 2");
    if (n > limits.alt_n_max) throw ResourceLimit("n = " + std::to_string(n) + " exceeds n_max = " + std::to_string(limits.alt_n_max));
    doc["group"] = "A_n";
    for (const auto& label : alternating_basic_set(n)) {
      json entry = quotient_json(label.partition);
      entry["label"] = to_text(label);
      members.push_back(std::move(entry));
    }
  }
  doc["size"] = members.size();
  if (opt.format == "json") {
    doc["members"] = std::move(members);
    emit(opt, dump(doc));
  } else {
    std::ostringstream out;
    const char sep = opt.format == "csv" ? ',' : ' ';
    if (opt.format == "csv") out << "label,partition,core,weight,quotient,branch\n";
    for (const auto& m : members)
      out << m.value("label", m["partition"].get<std::string>()) << sep << m["partition"].get<std::string>() << sep
          << m["core"].get<std::string>() << sep << m["weight"] << sep << "(" << m["quotient"][0].get<std::string>()
          << "|" << m["quotient"][1].get<std::string>() << ")" << sep << m["branch"].get<std::string>() << '\n';
    emit(opt, out.str());
  }
  return kOk;
}

int cmd_blocks(const Options& opt) {
  const int n = opt.n.value();
  const Limits limits = opt.limits();
  if (n > limits.sym_n_max) throw ResourceLimit("n = " + std::to_string(n) + " exceeds n_max = " + std::to_string(limits.sym_n_max));
  json blocks = json::array();
  for (const auto& b : two_blocks(n)) {
    json members = json::array();
    for (const auto& m : b.members) members.push_back(to_text(m));
    blocks.push_back({{"core", to_text(b.core)}, {"weight", b.weight}, {"members", std::move(members)}});
  }
  if (opt.format == "json") {
    emit(opt, dump({{"schema", kSchema}, {"n", n}, {"blocks", std::move(blocks)}}));
  } else {
    std::ostringstream out;
    for (const auto& b : blocks) {
      out << "core " << b["core"].get<std::string>() << " weight " << b["weight"] << ":";
      for (const auto& m : b["members"]) out << ' ' << m.get<std::string>();
      out << '\n';
    }
    emit(opt, out.str());
  }
  return kOk;
}

int cmd_quotient(const Options& opt) {
  const json j = quotient_json(parse_partition(opt.partition));
  if (opt.format == "json") {
    json doc = j;
    doc["schema"] = kSchema;
    emit(opt, dump(doc));
  } else {
    std::ostringstream out;
    for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    emit(opt, out.str());
  }
  return kOk;
}

using Task = std::function<std::vector<VerificationReport>()>;

// Runs tasks on `jobs` threads; results keep task order. The first failing
// task (by index) has its exception rethrown.
std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<VerificationReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < count; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<VerificationReport> out;
  for (auto& r : results)
    for (auto& x : r) out.push_back(std::move(x));
  return out;
}

int param_key(const VerificationReport& r) {
  if (r.params.contains("n")) return r.params["n"].get<int>();
  if (r.params.contains("w")) return r.params["w"].get<int>();
  return 0;
}

int cmd_verify(const Options& opt) {
  const Limits limits = opt.limits();
  const std::string& claim = opt.claim;
  auto n_values = [&](const std::string& fallback) {
    return parse_range(!opt.n_range.empty() ? opt.n_range : opt.n ? std::to_string(*opt.n) : fallback);
  };
  auto w_values = [&](const std::string& fallback) { return parse_range(!opt.w_range.empty() ? opt.w_range : fallback); };

  std::vector<Task> tasks;
  auto add_isometry = [&](int n) {
    tasks.push_back([n, limits] {
      if (n > limits.sym_n_max)
        throw ResourceLimit("n = " + std::to_string(n) + " exceeds n_max = " + std::to_string(limits.sym_n_max));
      std::vector<VerificationReport> out;
      for (const auto& block : two_blocks(n))
        if (block.weight > 0) out.push_back(verify_perfect_isometry(block, limits));
      return out;
    });
  };
  if (!opt.candidate.empty()) {
    if (claim != "sn") throw std::invalid_argument("--candidate applies to 'verify sn' only");
    std::vector<Partition> members;
    std::stringstream items(opt.candidate);
    std::string item;
    while (std::getline(items, item, ';')) members.push_back(parse_partition(item));
    for (int n : n_values("1"))
      tasks.push_back([n, members, limits] { return std::vector{verify_candidate_basic_set(n, members, limits)}; });
  } else if (claim == "sn") {
    for (int n : n_values("1..12"))
      tasks.push_back([n, limits] { return std::vector{verify_symmetric_basic_set(n, limits)}; });
  } else if (claim == "an") {
    for (int n : n_values("3..11"))
      tasks.push_back([n, limits] { return std::vector{verify_alternating_basic_set(n, limits)}; });
  } else if (claim == "base") {
    for (int w : w_values("1..5")) tasks.push_back([w, limits] { return std::vector{verify_doubled_basis(w, limits)}; });
  } else if (claim == "isometry") {
    for (int n : n_values("1..10")) add_isometry(n);
  } else if (claim == "wreath") {
    for (int w : w_values("1..5"))
      tasks.push_back([w, limits] {
        return std::vector{verify_untwisted_basic_set(w, UntwistedVariant::KernelCharacters, limits),
                           verify_untwisted_basic_set(w, UntwistedVariant::Mixed, limits)};
      });
  } else {  // all
    for (int n : n_values("1..10")) {
      tasks.push_back([n, limits] { return std::vector{verify_basic_set_theorem(n, limits)}; });
      add_isometry(n);
    }
    for (int w : w_values("1..4")) tasks.push_back([w, limits] { return std::vector{verify_doubled_basis(w, limits)}; });
  }

  auto reports = run_tasks(tasks, opt.jobs);
  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    if (a.claim != b.claim) return a.claim < b.claim;
    return param_key(a) < param_key(b);
  });
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });

  if (opt.format == "json") {
    json list = json::array();
    for (const auto& r : reports) {
      json j = to_json(r, opt.timings);
      j.erase("schema");
      list.push_back(std::move(j));
    }
    emit(opt, dump({{"schema", kSchema}, {"command", "verify"}, {"claim", claim}, {"passed", passed}, {"reports", std::move(list)}}));
  } else {
    std::ostringstream out;
    if (opt.format == "csv") out << "claim,params,passed\n";
    for (const auto& r : reports) {
      if (opt.format == "csv") {
        out << r.claim << ",\"" << r.params.dump() << "\"," << (r.passed ? "true" : "false") << '\n';
      } else {
        out << (r.passed ? "PASS " : "FAIL ") << r.claim;
        for (const auto& [k, v] : r.params.items()) out << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
        out << '\n';
      }
    }
    emit(opt, out.str());
  }
  return passed ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, 2-basic sets of symmetric and alternating groups, and their verification"};
  app.set_version_flag("--version", std::string(CHARBASIS_VERSION));
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--out", opt.out, "Write output to this file instead of stdout");
    cmd->add_option("--cache", opt.cache, "Directory for cached character tables (default: $CHARBASIS_CACHE)");
    cmd->add_option("--jobs", opt.jobs, "Worker threads for verification")->check(CLI::PositiveNumber);
    cmd->add_option("--n-max", opt.n_max, "Upper bound on n for S_n and A_n computations")->check(CLI::NonNegativeNumber);
    cmd->add_option("--w-max", opt.w_max, "Upper bound on w for wreath-product checks")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--timings", opt.timings, "Include runtime_ms in verification reports");
  };
  const std::vector<std::string> groups{"sn", "an"};

  auto* table = app.add_subcommand("table", "Print the character table of S_n or A_n");
  table->add_option("group", opt.group, "sn or an")->required()->check(CLI::IsMember(groups));
  table->add_option("degree", opt.n, "Degree n")->check(CLI::NonNegativeNumber);
  table->add_option("--n", opt.n, "Degree")->check(CLI::NonNegativeNumber);
  add_common(table);

  auto* basicset = app.add_subcommand("basicset", "List the 2-basic set with quotients and branches");
  basicset->add_option("group", opt.group, "sn or an")->required()->check(CLI::IsMember(groups));
  basicset->add_option("degree", opt.n, "Degree n")->check(CLI::NonNegativeNumber);
  basicset->add_option("--n", opt.n, "Degree")->check(CLI::NonNegativeNumber);
  add_common(basicset);

  auto* blocks = app.add_subcommand("blocks", "List the 2-blocks of S_n");
  blocks->add_option("degree", opt.n, "Degree n")->check(CLI::NonNegativeNumber);
  blocks->add_option("--n", opt.n, "Degree")->check(CLI::NonNegativeNumber);
  add_common(blocks);

  auto* quotient = app.add_subcommand("quotient", "Show 2-core, 2-quotient and basic-set membership of a partition");
  quotient->add_option("partition", opt.partition, "Partition such as 4+2+1")->required();
  add_common(quotient);

  auto* verify = app.add_subcommand("verify", "Run verification reports; exit 3 if any fails");
  verify->add_option("claim", opt.claim, "sn, an, base, isometry, wreath or all")
      ->required()
      ->check(CLI::IsMember({"sn", "an", "base", "isometry", "wreath", "all"}));
  verify->add_option("--n", opt.n_range, "Range of n, e.g. 1..8");
  verify->add_option("--w", opt.w_range, "Range of w, e.g. 1..4");
  verify->add_option("--range", opt.n_range, "Alias of --n");
  verify->add_option("--candidate", opt.candidate,
                     "With 'sn': check this set instead, partitions separated by ';' (e.g. \"4;3+1\")");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    for (auto* cmd : {table, basicset, blocks})
      if (cmd->parsed() && !opt.n) throw std::invalid_argument("missing degree n");
    if (table->parsed()) return cmd_table(opt);
    if (basicset->parsed()) return cmd_basicset(opt);
    if (blocks->parsed()) return cmd_blocks(opt);
    if (quotient->parsed()) return cmd_quotient(opt);
    return cmd_verify(opt);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource bound: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}
