#include "fanoscape/landscape.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fanoscape/errors.hpp"
#include "fanoscape/grading.hpp"

namespace fanoscape {

const char* to_string(RecordSource s) {
  switch (s) {
    case RecordSource::polytope: return "polytope";
    case RecordSource::hypersurface: return "hypersurface";
    case RecordSource::ingested: return "ingested";
  }
  return "ingested";
}

namespace {

RecordSource source_from_string(const std::string& s) {
  if (s == "polytope") return RecordSource::polytope;
  if (s == "hypersurface") return RecordSource::hypersurface;
  if (s == "ingested") return RecordSource::ingested;
  throw ParseError("unknown record source \"" + s + "\"");
}

long parse_long(const std::string& text, const char* what) {
  long v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty())
    throw ParseError(std::string(what) + " \"" + text + "\" is not an integer");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

void check_ranges(const LandscapeRecord& r) {
  if (r.id.empty()) throw InvalidArgument("record id must be nonempty");
  if (r.genus < -2) throw InvalidArgument("genus must be at least -2");
  if (r.codimension < 0) throw InvalidArgument("codimension must be nonnegative");
}

// Adds with line-numbered errors; duplicates keep their own error type.
void add_at_line(LandscapeStore& store, LandscapeRecord r, std::size_t line) {
  try {
    check_ranges(r);
  } catch (const InvalidArgument& e) {
    throw ParseError(line, e.what());
  }
  if (store.find(r.id)) throw DuplicateId("line " + std::to_string(line) + ": duplicate id " + r.id);
  store.add(std::move(r));
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

Json to_json(const LandscapeRecord& r) {
  Json j;
  j["id"] = r.id;
  j["genus"] = r.genus;
  j["codimension"] = r.codimension;
  j["source"] = to_string(r.source);
  if (r.payload) j["payload"] = *r.payload;
  return j;
}

LandscapeRecord record_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("record must be a JSON object");
  LandscapeRecord r;
  auto get = [&](const char* key) -> const Json& {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
  };
  const Json& id = get("id");
  if (!id.is_string()) throw ParseError("id must be a string");
  r.id = id.get<std::string>();
  const Json& g = get("genus");
  const Json& c = get("codimension");
  if (!g.is_number_integer()) throw ParseError("genus must be an integer");
  if (!c.is_number_integer()) throw ParseError("codimension must be an integer");
  r.genus = g.get<long>();
  r.codimension = c.get<long>();
  if (auto it = j.find("source"); it != j.end()) {
    if (!it->is_string()) throw ParseError("source must be a string");
    r.source = source_from_string(it->get<std::string>());
  }
  if (auto it = j.find("payload"); it != j.end() && !it->is_null()) r.payload = *it;
  return r;
}

void LandscapeStore::add(LandscapeRecord r) {
  check_ranges(r);
  if (index_.count(r.id)) throw DuplicateId("duplicate id " + r.id);
  index_.emplace(r.id, records_.size());
  records_.push_back(std::move(r));
}

const LandscapeRecord* LandscapeStore::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &records_[it->second];
}

LandscapeStore ingest(std::istream& in, IngestFormat format) {
  LandscapeStore store;
  std::string line;
  std::size_t lineno = 0;
  if (format == IngestFormat::jsonl) {
    while (std::getline(in, line)) {
      ++lineno;
      if (trim(line).empty()) continue;
      LandscapeRecord r;
      try {
        r = record_from_json(parse_json(line));
      } catch (const ParseError& e) {
        throw ParseError(lineno, e.what());
      }
      add_at_line(store, std::move(r), lineno);
    }
    return store;
  }

  std::size_t col_id = 0, col_genus = 0, col_codim = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split_csv(line);
    if (!have_header) {
      bool seen[3] = {false, false, false};
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == "id") col_id = i, seen[0] = true;
        else if (cells[i] == "genus") col_genus = i, seen[1] = true;
        else if (cells[i] == "codimension") col_codim = i, seen[2] = true;
      }
      if (!seen[0] || !seen[1] || !seen[2])
        throw ParseError(lineno, "header must name the columns id, genus, codimension");
      have_header = true;
      continue;
    }
    const std::size_t need = std::max({col_id, col_genus, col_codim}) + 1;
    if (cells.size() < need) throw ParseError(lineno, "too few columns");
    LandscapeRecord r;
    r.id = cells[col_id];
    try {
      r.genus = parse_long(cells[col_genus], "genus");
      r.codimension = parse_long(cells[col_codim], "codimension");
    } catch (const ParseError& e) {
      throw ParseError(lineno, e.what());
    }
    r.source = RecordSource::ingested;
    add_at_line(store, std::move(r), lineno);
  }
  if (!have_header) throw ParseError(lineno ? lineno : 1, "missing CSV header");
  return store;
}

LandscapeStore ingest(const std::string& path, IngestFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return ingest(in, format);
}

void write_jsonl(const LandscapeStore& store, std::ostream& out) {
  for (const auto& r : store.records()) out << to_json(r).dump() << '\n';
}

void save_jsonl(const LandscapeStore& store, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  write_jsonl(store, out);
  if (!out) throw IoError("failed writing " + path);
}

void append_jsonl(const std::vector<LandscapeRecord>& records, const std::string& path) {
  LandscapeStore existing;
  if (std::ifstream probe(path); probe) existing = ingest(probe, IngestFormat::jsonl);
  for (const auto& r : records) existing.add(r);
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot write " + path);
  for (const auto& r : records) out << to_json(r).dump() << '\n';
  if (!out) throw IoError("failed writing " + path);
}

LandscapeRecord record_from_polytope(const LatticePolytope& p) {
  if (p.dim() != 3) throw DimensionMismatch("landscape records need 3-dimensional polytopes");
  if (!is_fano(p)) throw InvalidArgument("polytope is not Fano");
  const LatticePolytope nf = normal_form(p);
  LandscapeRecord r;
  r.payload = to_json(nf);
  r.id = "polytope:" + fnv1a_hex(r.payload->dump());
  r.genus = genus(nf);
  r.codimension = codimension_estimate(nf);
  r.source = RecordSource::polytope;
  return r;
}

LandscapeRecord record_from_candidate(const HypersurfaceCandidate& c) {
  LandscapeRecord r;
  r.id = c.label();
  r.genus = candidate_invariants(c).genus;
  r.codimension = 1;
  r.source = RecordSource::hypersurface;
  r.payload = to_json(c);
  return r;
}

}  // namespace fanoscape
