#include "charbasis/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace charbasis {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda)
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

std::vector<int> beta_set(const Partition& lambda, int beads) {
  if (beads < lambda.length())
    throw std::invalid_argument("beta_set: fewer beads than parts");
  std::vector<int> beta(static_cast<std::size_t>(beads));
  for (int i = 0; i < beads; ++i)
    beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + beads - 1 - i;
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  if (std::adjacent_find(beta.begin(), beta.end()) != beta.end())
    throw std::invalid_argument("beta-set has repeated entries");
  if (!beta.empty() && beta.back() < 0)
    throw std::invalid_argument("beta-set has negative entries");
  const int k = static_cast<int>(beta.size());
  std::vector<int> parts;
  parts.reserve(beta.size());
  for (int i = 0; i < k; ++i) parts.push_back(beta[static_cast<std::size_t>(i)] - (k - 1 - i));
  return Partition(std::move(parts));
}

TwoQuotientData two_quotient(const Partition& lambda) {
  const int beads = lambda.length() + (lambda.length() % 2);
  std::vector<int> runner[2];
  for (int b : beta_set(lambda, beads)) runner[b % 2].push_back(b / 2);

  std::vector<int> core_beta;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < static_cast<int>(runner[j].size()); ++i) core_beta.push_back(2 * i + j);

  TwoQuotientData out;
  out.core = from_beta_set(std::move(core_beta));
  out.quotient = {from_beta_set(runner[0]), from_beta_set(runner[1])};
  out.weight = (lambda.size() - out.core.size()) / 2;
  return out;
}

bool is_two_core(const Partition& lambda) {
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda[static_cast<std::size_t>(i)] != lambda.length() - i) return false;
  return true;
}

Partition from_two_quotient(const Partition& core, const PartitionPair& quotient) {
  if (!is_two_core(core))
    throw std::invalid_argument("from_two_quotient: " + to_text(core) + " is not a 2-core");
  const int half = core.length() + quotient.first.length() + quotient.second.length() + 1;
  int counts[2] = {0, 0};
  for (int b : beta_set(core, 2 * half)) ++counts[b % 2];

  std::vector<int> beta;
  const Partition* comps[2] = {&quotient.first, &quotient.second};
  for (int j = 0; j < 2; ++j)
    for (int p : beta_set(*comps[j], counts[j])) beta.push_back(2 * p + j);
  return from_beta_set(std::move(beta));
}

Partition diagonal_hooks(const Partition& lambda) {
  if (!is_self_conjugate(lambda))
    throw std::invalid_argument("diagonal_hooks: " + to_text(lambda) + " is not self-conjugate");
  std::vector<int> hooks;
  for (int i = 0; i < lambda.length() && lambda[static_cast<std::size_t>(i)] > i; ++i)
    hooks.push_back(2 * (lambda[static_cast<std::size_t>(i)] - i) - 1);
  return Partition(std::move(hooks));
}

BigInt centralizer_order(const Partition& cycle_type) {
  std::map<int, unsigned> mult;
  for (int k : cycle_type) ++mult[k];
  BigInt z = 1;
  for (auto [k, a] : mult) {
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(k), a);
    z *= pk * factorial(a);
  }
  return z;
}

BigInt class_size(const Partition& cycle_type) {
  return factorial(static_cast<unsigned>(cycle_type.size())) / centralizer_order(cycle_type);
}

int cycle_sign(const Partition& cycle_type) {
  return (cycle_type.size() - cycle_type.length()) % 2 == 0 ? 1 : -1;
}

bool all_parts_odd(const Partition& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x % 2 == 1; });
}

bool all_parts_even(const Partition& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x % 2 == 0; });
}

bool has_distinct_parts(const Partition& lambda) {
  return std::adjacent_find(lambda.begin(), lambda.end()) == lambda.end();
}

BigInt standard_tableaux_count(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
      hooks *= lambda[static_cast<std::size_t>(i)] - j + conj[static_cast<std::size_t>(j)] - i - 1;
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> enumerate(const PartitionFamily& family) {
  using Kind = PartitionFamily::Kind;
  std::vector<Partition> all = partitions(family.n);
  if (family.kind == Kind::AllOfN) return all;
  std::vector<Partition> out;
  for (auto& p : all) {
    bool keep = false;
    switch (family.kind) {
      case Kind::OddParts: keep = all_parts_odd(p); break;
      case Kind::DistinctParts: keep = has_distinct_parts(p); break;
      case Kind::SelfConjugate: keep = is_self_conjugate(p); break;
      case Kind::AllEvenParts: keep = all_parts_even(p); break;
      case Kind::AllOfN: keep = true; break;
    }
    if (keep) out.push_back(std::move(p));
  }
  return out;
}

std::size_t count_distinct_odd(int n) {
  std::size_t count = 0;
  for (const auto& p : partitions(n))
    if (all_parts_odd(p) && has_distinct_parts(p)) ++count;
  return count;
}

std::string to_text(const Partition& lambda) {
  if (lambda.empty()) return "0";
  std::string s;
  for (int i = 0; i < lambda.length(); ++i) {
    if (i) s += '+';
    s += std::to_string(lambda[static_cast<std::size_t>(i)]);
  }
  return s;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    if (digits.size() > 6) throw std::invalid_argument("partition part too large: " + digits);
    parts.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == '+' || c == ',' || c == ' ' || c == '[' || c == ']' || c == '(' || c == ')') {
      flush();
    } else {
      throw std::invalid_argument("malformed partition text: " + std::string(text));
    }
  }
  flush();
  if (parts.size() == 1 && parts[0] == 0) return {};
  if (std::find(parts.begin(), parts.end(), 0) != parts.end())
    throw std::invalid_argument("partition parts must be positive: " + std::string(text));
  return Partition::from_parts(std::move(parts));
}

}  // namespace charbasis
