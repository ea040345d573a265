#include "ssshapelets/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ssshapelets/error.hpp"

namespace ssshapelets {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

Delimiter detect(std::string_view line) {
  if (line.find(',') != std::string_view::npos) return Delimiter::kComma;
  if (line.find('\t') != std::string_view::npos) return Delimiter::kTab;
  return Delimiter::kWhitespace;
}

std::vector<std::string_view> split(std::string_view line, Delimiter delimiter) {
  std::vector<std::string_view> fields;
  if (delimiter == Delimiter::kWhitespace) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_blank(line[i])) ++i;
      const std::size_t begin = i;
      while (i < line.size() && !is_blank(line[i])) ++i;
      if (i > begin) fields.push_back(line.substr(begin, i - begin));
    }
    return fields;
  }
  const char sep = delimiter == Delimiter::kComma ? ',' : '\t';
  std::size_t begin = 0;
  for (;;) {
    const std::size_t end = line.find(sep, begin);
    fields.push_back(trim(line.substr(begin, end - begin)));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return fields;
}

double parse_number(std::string_view token, std::size_t line, std::size_t column) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": non-numeric token '" +
                     std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw InputError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": non-finite value");
  }
  return value;
}

}  // namespace

Delimiter parse_delimiter(std::string_view name) {
  if (name == "auto") return Delimiter::kAuto;
  if (name == "comma") return Delimiter::kComma;
  if (name == "tab") return Delimiter::kTab;
  if (name == "whitespace") return Delimiter::kWhitespace;
  throw InputError("unknown delimiter '" + std::string(name) + "'");
}

Dataset::Dataset(std::vector<TimeSeries> series, int num_classes)
    : series_(std::move(series)), num_classes_(num_classes) {
  if (series_.empty()) throw InputError("dataset is empty");
  length_ = series_.front().length();
  for (std::size_t i = 0; i < series_.size(); ++i) {
    const TimeSeries& s = series_[i];
    if (s.id != i) throw InputError("series ids must be 0..n-1 in order");
    if (s.length() != length_) throw InputError("series lengths differ");
    if (s.label && (*s.label < 0 || *s.label >= num_classes_)) {
      throw InputError("label out of range for series " + std::to_string(i));
    }
  }
  if (length_ == 0) throw InputError("series are empty");
  if (static_cast<std::size_t>(num_classes_) > series_.size()) {
    throw InputError("more classes than series");
  }
}

std::vector<int> Dataset::labels() const {
  std::vector<int> out;
  out.reserve(series_.size());
  for (const TimeSeries& s : series_) {
    if (!s.label) throw InputError("series " + std::to_string(s.id) + " has no label");
    out.push_back(*s.label);
  }
  return out;
}

Dataset Dataset::with_labels_only(std::span<const std::size_t> keep) const {
  std::vector<bool> kept(series_.size(), false);
  for (std::size_t id : keep) {
    if (id >= series_.size()) throw InputError("series id out of range");
    kept[id] = true;
  }
  std::vector<TimeSeries> copy = series_;
  for (TimeSeries& s : copy) {
    if (!kept[s.id]) s.label.reset();
  }
  Dataset out;
  out.series_ = std::move(copy);
  out.length_ = length_;
  out.num_classes_ = num_classes_;
  return out;
}

std::vector<RawSeries> parse_ucr(std::string_view text, Delimiter delimiter) {
  std::vector<RawSeries> rows;
  std::map<double, int> label_ids;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find('\n', begin), text.size());
    const std::string_view line = trim(text.substr(begin, end - begin));
    begin = end + 1;
    ++line_no;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (delimiter == Delimiter::kAuto) delimiter = detect(line);
    const std::vector<std::string_view> fields = split(line, delimiter);
    if (fields.size() < 2) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected a label followed by values");
    }
    const double label = parse_number(fields[0], line_no, 1);
    RawSeries row;
    row.label = label_ids.try_emplace(label, static_cast<int>(label_ids.size()))
                    .first->second;
    row.values.reserve(fields.size() - 1);
    for (std::size_t f = 1; f < fields.size(); ++f) {
      row.values.push_back(parse_number(fields[f], line_no, f + 1));
    }
    if (!rows.empty() && row.values.size() != rows.front().values.size()) {
      throw InputError("line " + std::to_string(line_no) +
                       ": inconsistent row length (" +
                       std::to_string(row.values.size()) + " values, expected " +
                       std::to_string(rows.front().values.size()) + ")");
    }
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  if (rows.empty()) throw InputError("input contains no series");
  return rows;
}

TimeSeries znormalize(const RawSeries& raw, std::size_t id) {
  TimeSeries out;
  out.id = id;
  out.label = raw.label;
  const std::size_t n = raw.values.size();
  out.values.assign(n, 0.0);
  if (n == 0) return out;
  double mean = 0.0;
  for (double v : raw.values) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : raw.values) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / static_cast<double>(n));
  if (sd < 1e-12) return out;
  for (std::size_t i = 0; i < n; ++i) out.values[i] = (raw.values[i] - mean) / sd;
  return out;
}

Dataset make_dataset(std::span<const RawSeries> rows) {
  std::vector<TimeSeries> series;
  series.reserve(rows.size());
  int classes = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    series.push_back(znormalize(rows[i], i));
    classes = std::max(classes, rows[i].label + 1);
  }
  return Dataset(std::move(series), classes);
}

Dataset load_ucr(std::span<const std::filesystem::path> paths,
                 Delimiter delimiter) {
  if (paths.empty()) throw InputError("no input files given");
  std::string text;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text += buffer.str();
    if (!text.empty() && text.back() != '\n') text += '\n';
  }
  const std::vector<RawSeries> rows = parse_ucr(text, delimiter);
  return make_dataset(rows);
}

}  // namespace ssshapelets
