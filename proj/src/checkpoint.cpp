#include "sondow/search.hpp"

#include "sondow/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sondow {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json optional_flag(const std::optional<bool>& flag) {
  return flag ? ordered_json(*flag) : ordered_json(nullptr);
}

ordered_json record_to_json(const SearchRecord& r) {
  ordered_json factors = ordered_json::array();
  for (const auto& [p, e] : r.factorization.factors()) {
    factors.push_back(ordered_json::array({to_decimal(p), e}));
  }
  ordered_json flags = {
      {"divisibility", r.flags.divisibility},
      {"power_sum", optional_flag(r.flags.power_sum)},
      {"power_sum_lambda", optional_flag(r.flags.power_sum_lambda)},
      {"bernoulli", optional_flag(r.flags.bernoulli)},
      {"bernoulli_congruence", r.flags.bernoulli_congruence},
      {"egyptian", r.flags.egyptian},
      {"congruence_sum", r.flags.congruence_sum},
      {"derivative", optional_flag(r.flags.derivative)},
  };
  return {{"n", std::to_string(r.n)},
          {"mu", std::to_string(r.mu)},
          {"factors", std::move(factors)},
          {"flags", std::move(flags)},
          {"composite", r.composite}};
}

[[noreturn]] void bad_record(const std::string& why) {
  throw Error(ErrorKind::Parse, "malformed record: " + why);
}

const ordered_json& field(const ordered_json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad_record(std::string("missing key '") + key + "'");
  return *it;
}

std::string decimal_field(const ordered_json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_string()) bad_record(std::string("'") + key + "' must be a decimal string");
  return v.get<std::string>();
}

std::optional<bool> optional_flag_from(const ordered_json& flags, const char* key) {
  const auto& v = field(flags, key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_boolean()) bad_record(std::string("flag '") + key + "' must be bool or null");
  return v.get<bool>();
}

bool flag_from(const ordered_json& flags, const char* key) {
  const auto& v = field(flags, key);
  if (!v.is_boolean()) bad_record(std::string("flag '") + key + "' must be bool");
  return v.get<bool>();
}

std::vector<PrimePower> factors_from(const ordered_json& arr) {
  if (!arr.is_array()) bad_record("'factors' must be an array");
  std::vector<PrimePower> out;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_number_unsigned()) {
      bad_record("each factor must be [\"prime\", exponent]");
    }
    out.push_back({parse_bigint(pair[0].get<std::string>()), pair[1].get<unsigned>()});
  }
  return out;
}

SearchRecord record_from_json(const ordered_json& obj) {
  if (!obj.is_object()) bad_record("expected an object");
  SearchRecord r;
  auto n = to_u64(parse_bigint(decimal_field(obj, "n")));
  auto mu = to_i64(parse_bigint(decimal_field(obj, "mu")));
  if (!n || *n < 1) bad_record("'n' out of range");
  if (!mu) bad_record("'mu' out of range");
  r.n = *n;
  r.mu = *mu;
  try {
    r.factorization = Factorization::from_claimed(from_u64(r.n), factors_from(field(obj, "factors")));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    bad_record(e.what());
  }
  const auto& flags = field(obj, "flags");
  if (!flags.is_object()) bad_record("'flags' must be an object");
  r.flags.divisibility = flag_from(flags, "divisibility");
  r.flags.power_sum = optional_flag_from(flags, "power_sum");
  r.flags.power_sum_lambda = optional_flag_from(flags, "power_sum_lambda");
  r.flags.bernoulli = optional_flag_from(flags, "bernoulli");
  r.flags.bernoulli_congruence = flag_from(flags, "bernoulli_congruence");
  r.flags.egyptian = flag_from(flags, "egyptian");
  r.flags.congruence_sum = flag_from(flags, "congruence_sum");
  r.flags.derivative = optional_flag_from(flags, "derivative");
  const auto& composite = field(obj, "composite");
  if (!composite.is_boolean()) bad_record("'composite' must be bool");
  r.composite = composite.get<bool>();
  if (r.composite != r.factorization.is_composite()) bad_record("'composite' contradicts factors");
  return r;
}

}  // namespace

std::string to_jsonl(const SearchRecord& record) { return record_to_json(record).dump(); }

SearchRecord parse_jsonl_record(std::string_view line) {
  ordered_json obj;
  try {
    obj = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    bad_record(e.what());
  }
  return record_from_json(obj);
}

std::vector<PrimePower> parse_factor_list_json(std::string_view json_array) {
  ordered_json arr;
  try {
    arr = ordered_json::parse(json_array);
  } catch (const nlohmann::json::exception& e) {
    bad_record(e.what());
  }
  return factors_from(arr);
}

void checkpoint_save(const Checkpoint& state, const std::filesystem::path& path) {
  ordered_json records = ordered_json::array();
  for (const auto& r : state.records_so_far) records.push_back(record_to_json(r));
  ordered_json doc = {{"mu", std::to_string(state.mu)},
                      {"next_segment_lo", std::to_string(state.next_segment_lo)},
                      {"records", std::move(records)}};
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::CheckpointParse, "cannot write " + tmp.string());
    out << doc.dump() << '\n';
    if (!out.flush()) throw Error(ErrorKind::CheckpointParse, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint checkpoint_resume(const std::filesystem::path& path, std::int64_t expected_mu) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::CheckpointParse, "checkpoint " + path.string() + ": " + why);
  };
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fail("cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw fail("file is empty");

  Checkpoint cp;
  try {
    const auto doc = ordered_json::parse(text);
    if (!doc.is_object() || doc.size() != 3) throw fail("expected {mu, next_segment_lo, records}");
    auto mu = to_i64(parse_bigint(decimal_field(doc, "mu")));
    auto next = to_u64(parse_bigint(decimal_field(doc, "next_segment_lo")));
    if (!mu || !next || *next < 2) throw fail("mu or next_segment_lo out of range");
    cp.mu = *mu;
    cp.next_segment_lo = *next;
    const auto& records = field(doc, "records");
    if (!records.is_array()) throw fail("'records' must be an array");
    for (const auto& obj : records) cp.records_so_far.push_back(record_from_json(obj));
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CheckpointParse) throw;
    throw fail(e.what());
  }

  if (cp.mu != expected_mu) {
    throw Error(ErrorKind::CheckpointMismatch, "checkpoint is for mu = " + std::to_string(cp.mu) +
                                                   ", not " + std::to_string(expected_mu));
  }
  const BigInt mu_big = from_i64(cp.mu);
  std::uint64_t previous = 0;
  for (const auto& r : cp.records_so_far) {
    if (r.mu != cp.mu) throw fail("record with foreign mu " + std::to_string(r.mu));
    if (r.n <= previous) throw fail("records not strictly increasing");
    if (r.n >= cp.next_segment_lo) throw fail("record beyond next_segment_lo");
    if (!is_mu_sondow(r.factorization, mu_big).member || !r.flags.divisibility) {
      throw fail("record " + std::to_string(r.n) + " is not a member");
    }
    previous = r.n;
  }
  return cp;
}

}  // namespace sondow
