#include "sondow/corpus.hpp"

#include "sondow/predicates.hpp"
#include "sondow/search.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace sondow {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> out;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "b-file line " + std::to_string(i + 1);
    std::istringstream fields{std::string(line)};
    std::string index_text, value_text, extra;
    if (!(fields >> index_text >> value_text) || (fields >> extra)) {
      throw Error(ErrorKind::Parse, where + ": expected 'index value'");
    }
    BFileEntry entry;
    try {
      auto index = to_i64(parse_bigint(index_text));
      if (!index) throw Error(ErrorKind::Parse, "index out of range");
      entry.index = *index;
      entry.value = parse_bigint(value_text);
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, where + ": " + e.what());
    }
    if (!out.empty() && entry.index <= out.back().index) {
      throw Error(ErrorKind::Format, where + ": index " + std::to_string(entry.index) +
                                         " does not increase");
    }
    if (entry.value < 1) throw Error(ErrorKind::Format, where + ": value must be positive");
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<FactorListInput> parse_factor_hints(std::string_view text) {
  std::vector<FactorListInput> out;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "hint line " + std::to_string(i + 1) + ": ";
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, where + e.what());
    }
    if (!obj.is_object() || !obj.contains("n") || !obj["n"].is_string() ||
        !obj.contains("factors")) {
      throw Error(ErrorKind::Parse, where + "expected {\"n\": \"...\", \"factors\": [...]}");
    }
    try {
      BigInt value = parse_bigint(obj["n"].get<std::string>());
      auto factors = parse_factor_list_json(obj["factors"].dump());
      out.push_back({value, Factorization::from_claimed(value, std::move(factors))});
    } catch (const Error& e) {
      throw Error(e.kind(), where + e.what());
    }
  }
  return out;
}

FactorListInput parse_factor_spec(const BigInt& value, std::string_view spec) {
  std::vector<PrimePower> factors;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    const std::string_view item = trim(spec.substr(start, end - start));
    if (item.empty()) throw Error(ErrorKind::Parse, "empty factor in '" + std::string(spec) + "'");
    const auto caret = item.find('^');
    PrimePower pp;
    pp.prime = parse_bigint(item.substr(0, caret));
    if (caret != std::string_view::npos) {
      auto e = to_u64(parse_bigint(item.substr(caret + 1)));
      if (!e || *e == 0 || *e > 0xFFFFFFFFu) {
        throw Error(ErrorKind::Parse, "bad exponent in '" + std::string(item) + "'");
      }
      pp.exponent = static_cast<unsigned>(*e);
    }
    factors.push_back(std::move(pp));
    start = end + 1;
  }
  return {value, Factorization::from_claimed(value, std::move(factors))};
}

CorpusPredicate CorpusPredicate::parse(std::string_view name) {
  CorpusPredicate p;
  if (name == "giuga") {
    p.kind = Kind::Giuga;
  } else if (name == "weak_ppp") {
    p.kind = Kind::WeakPpp;
  } else if (name == "primary_ppp") {
    p.kind = Kind::PrimaryPpp;
  } else if (name.starts_with("sondow:")) {
    p.kind = Kind::Sondow;
    p.mu = parse_bigint(name.substr(7));
  } else {
    throw Error(ErrorKind::Parse, "unknown predicate '" + std::string(name) +
                                      "' (giuga, weak_ppp, primary_ppp, sondow:<mu>)");
  }
  return p;
}

std::string CorpusPredicate::name() const {
  switch (kind) {
    case Kind::Giuga: return "giuga";
    case Kind::WeakPpp: return "weak_ppp";
    case Kind::PrimaryPpp: return "primary_ppp";
    case Kind::Sondow: return "sondow:" + to_decimal(mu);
  }
  return "?";
}

std::vector<BigInt> CrosscheckReport::failures() const {
  std::vector<BigInt> out;
  for (const auto& e : entries) {
    if (e.outcome == CrosscheckOutcome::Fail) out.push_back(e.value);
  }
  return out;
}

CrosscheckReport crosscheck(const std::vector<BFileEntry>& entries, const CorpusPredicate& predicate,
                            const std::vector<FactorListInput>& hints, const FactorBudget& budget) {
  std::map<BigInt, const Factorization*> by_value;
  for (const auto& h : hints) by_value.emplace(h.claimed_value, &h.factorization);

  CrosscheckReport report;
  for (const auto& entry : entries) {
    CrosscheckEntry row{entry.index, entry.value, CrosscheckOutcome::Skipped, {}};
    Factorization f;
    if (auto it = by_value.find(entry.value); it != by_value.end()) {
      f = *it->second;
      row.note = "hint";
    } else {
      try {
        f = factorize(entry.value, budget);
        row.note = "factored";
      } catch (const FactorizationIncomplete& e) {
        row.note = "unfactored cofactor " + to_decimal(e.cofactor());
        ++report.skipped;
        report.entries.push_back(std::move(row));
        continue;
      }
    }
    bool holds = false;
    try {
      switch (predicate.kind) {
        case CorpusPredicate::Kind::Giuga: holds = is_giuga(f); break;
        case CorpusPredicate::Kind::WeakPpp: holds = is_weak_ppp(f); break;
        case CorpusPredicate::Kind::PrimaryPpp: holds = is_primary_ppp(f); break;
        case CorpusPredicate::Kind::Sondow: holds = is_mu_sondow(f, predicate.mu).member; break;
      }
    } catch (const Error& e) {
      row.note = e.what();
      holds = false;
    }
    row.outcome = holds ? CrosscheckOutcome::Pass : CrosscheckOutcome::Fail;
    ++(holds ? report.passed : report.failed);
    report.entries.push_back(std::move(row));
  }
  return report;
}

}  // namespace sondow
