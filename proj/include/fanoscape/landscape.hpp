#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanoscape/json_io.hpp"
#include "fanoscape/polytope.hpp"
#include "fanoscape/wps.hpp"

namespace fanoscape {

enum class RecordSource { polytope, hypersurface, ingested };
const char* to_string(RecordSource s);

struct LandscapeRecord {
  std::string id;
  long genus = 0;
  long codimension = 0;
  RecordSource source = RecordSource::ingested;
  std::optional<Json> payload;

  friend bool operator==(const LandscapeRecord&, const LandscapeRecord&) = default;
};

Json to_json(const LandscapeRecord& r);
LandscapeRecord record_from_json(const Json& j);

/// Records in insertion order with an index on id.
class LandscapeStore {
 public:
  /// Throws DuplicateId for a repeated id, InvalidArgument if genus < -2 or
  /// codimension < 0.
  void add(LandscapeRecord r);

  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const std::vector<LandscapeRecord>& records() const noexcept { return records_; }
  const LandscapeRecord* find(const std::string& id) const;

  friend bool operator==(const LandscapeStore& a, const LandscapeStore& b) {
    return a.records_ == b.records_;
  }

 private:
  std::vector<LandscapeRecord> records_;
  std::map<std::string, std::size_t> index_;
};

enum class IngestFormat { csv, jsonl };

/// Loads records. ParseError carries the 1-based line; DuplicateId on repeats.
LandscapeStore ingest(std::istream& in, IngestFormat format);
LandscapeStore ingest(const std::string& path, IngestFormat format);

void write_jsonl(const LandscapeStore& store, std::ostream& out);
void save_jsonl(const LandscapeStore& store, const std::string& path);
/// Appends records to an existing JSONL file; ids already in the file raise DuplicateId.
void append_jsonl(const std::vector<LandscapeRecord>& records, const std::string& path);

LandscapeRecord record_from_polytope(const LatticePolytope& p);
LandscapeRecord record_from_candidate(const HypersurfaceCandidate& c);

enum class PlotKind { scatter, histogram };

struct AxisRange {
  double lo;
  double hi;
};

struct PlotSpec {
  PlotKind kind = PlotKind::scatter;
  std::optional<AxisRange> x_range;  // derived from the data when unset
  std::optional<AxisRange> y_range;
  double marker_size = 4.0;
  std::string output_path;
};

/// Deterministic SVG. EmptyStore for a scatter of an empty store.
std::string render_svg(const LandscapeStore& store, const PlotSpec& spec);
/// Writes render_svg to spec.output_path.
void emit_plot(const LandscapeStore& store, const PlotSpec& spec);

}  // namespace fanoscape
