#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssshapelets {

enum class Delimiter { kAuto, kComma, kTab, kWhitespace };

// Parses "auto", "comma", "tab" or "whitespace".
Delimiter parse_delimiter(std::string_view name);

// One row of a UCR file before normalization.
struct RawSeries {
  int label = 0;
  std::vector<double> values;
};

struct TimeSeries {
  std::size_t id = 0;
  std::optional<int> label;
  std::vector<double> values;

  std::size_t length() const { return values.size(); }
};

// Immutable collection of equal-length, z-normalized series with dense ids
// 0..n-1 and labels (where present) in [0, num_classes).
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<TimeSeries> series, int num_classes);

  std::size_t size() const { return series_.size(); }
  std::size_t series_length() const { return length_; }
  int num_classes() const { return num_classes_; }

  const TimeSeries& operator[](std::size_t id) const { return series_[id]; }
  std::span<const TimeSeries> series() const { return series_; }

  // Ground-truth labels; throws InputError if any series is unlabeled.
  std::vector<int> labels() const;

  // Copy of the dataset in which only the given ids keep their labels.
  Dataset with_labels_only(std::span<const std::size_t> keep) const;

 private:
  std::vector<TimeSeries> series_;
  std::size_t length_ = 0;
  int num_classes_ = 0;
};

// Parses UCR-format text: one series per nonempty line, class label first.
// Labels are remapped to 0..c-1 in order of first appearance. Throws
// InputError on empty input, bad tokens (with line and column) and ragged rows.
std::vector<RawSeries> parse_ucr(std::string_view text,
                                 Delimiter delimiter = Delimiter::kAuto);

// (t - mean) / population std; constant series (std < 1e-12) map to zeros.
TimeSeries znormalize(const RawSeries& raw, std::size_t id = 0);

// Normalizes every row and assigns ids in row order.
Dataset make_dataset(std::span<const RawSeries> rows);

// Reads and concatenates one or more UCR files (e.g. _TRAIN and _TEST) into a
// single dataset.
Dataset load_ucr(std::span<const std::filesystem::path> paths,
                 Delimiter delimiter = Delimiter::kAuto);

}  // namespace ssshapelets
