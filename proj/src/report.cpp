#include "ewm/report.hpp"

#include <algorithm>
#include <optional>

#include <fmt/format.h>

namespace ewm {
namespace {

// CSV fields holding commas, quotes or line breaks are quoted.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string optional_value(const std::optional<double>& v, const char* spec) {
  return v ? fmt::format(fmt::runtime(spec), *v) : std::string("NA");
}

}  // namespace

std::string weights_table(const Schema& schema, const EntropyVector& entropies,
                          const WeightVector& weights) {
  std::size_t cat_w = std::string_view("Category").size();
  std::size_t ind_w = std::string_view("Indicator").size();
  for (const auto& spec : schema.indicators()) {
    cat_w = std::max(cat_w, category_label(spec.category).size());
    ind_w = std::max(ind_w, spec.display_label().size());
  }
  std::string out = fmt::format("{:<{}}  {:<{}}  {:>10}  {:>10}\n", "Category", cat_w, "Indicator",
                                ind_w, "Entropy", "Weight");
  out += std::string(cat_w + ind_w + 26, '-') + "\n";
  for (std::size_t j = 0; j < schema.size(); ++j) {
    const auto& spec = schema[j];
    out += fmt::format("{:<{}}  {:<{}}  {:>10.6f}  {:>10.6f}\n", category_label(spec.category),
                       cat_w, spec.display_label(), ind_w, entropies[j], weights[j]);
  }
  return out;
}

std::string weights_csv(const Schema& schema, const EntropyVector& entropies,
                        const WeightVector& weights) {
  std::string out = "category,indicator,direction,entropy,weight\n";
  for (std::size_t j = 0; j < schema.size(); ++j) {
    const auto& spec = schema[j];
    out += fmt::format("{},{},{},{},{}\n", to_string(spec.category), csv_field(spec.name),
                       to_string(spec.direction), entropies[j], weights[j]);
  }
  return out;
}

std::string ranking_table(const std::vector<std::string>& entity_ids, const EvaluationReport& report) {
  std::size_t id_w = std::string_view("Entity").size();
  for (const auto& id : entity_ids) id_w = std::max(id_w, id.size());
  std::string out = fmt::format("{:>7}  {:<{}}  {:>9}\n", "Ranking", "Entity", id_w, "Score");
  out += std::string(id_w + 20, '-') + "\n";
  const auto& ranking = report.ranking();
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    const auto i = ranking[k];
    out += fmt::format("{:>7}  {:<{}}  {:>9.2f}\n", k + 1, entity_ids[i], id_w, report.scores()[i]);
  }
  return out;
}

std::string scores_csv(const std::vector<std::string>& entity_ids, const EvaluationReport& report) {
  std::string out = "rank,entity_id,score\n";
  const auto& ranking = report.ranking();
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    const auto i = ranking[k];
    out += fmt::format("{},{},{}\n", k + 1, csv_field(entity_ids[i]), report.scores()[i]);
  }
  return out;
}

std::string stats_block(const DescriptiveStats& stats) {
  std::string out;
  auto line = [&out](std::string_view label, const std::string& value) {
    out += fmt::format("{:<10}{:>16}\n", label, value);
  };
  line("Mean", fmt::format("{:.8f}", stats.mean));
  line("median", fmt::format("{:.8f}", stats.median));
  line("Std. Dev", fmt::format("{:.8f}", stats.std_dev));
  line("Kurtosis", optional_value(stats.kurtosis, "{:.8f}"));
  line("Skewness", optional_value(stats.skewness, "{:.8f}"));
  line("Smallest", fmt::format("{:.2f}", stats.smallest));
  line("Largest", fmt::format("{:.2f}", stats.largest));
  line("Obs", fmt::format("{}", stats.obs));
  return out;
}

std::string stats_csv(const DescriptiveStats& stats) {
  std::string out = "statistic,value\n";
  out += fmt::format("mean,{}\n", stats.mean);
  out += fmt::format("median,{}\n", stats.median);
  out += fmt::format("std_dev,{}\n", stats.std_dev);
  out += fmt::format("kurtosis,{}\n", optional_value(stats.kurtosis, "{}"));
  out += fmt::format("skewness,{}\n", optional_value(stats.skewness, "{}"));
  out += fmt::format("smallest,{}\n", stats.smallest);
  out += fmt::format("largest,{}\n", stats.largest);
  out += fmt::format("obs,{}\n", stats.obs);
  return out;
}

std::string normalized_csv(const std::vector<std::string>& entity_ids, const NormalizedMatrix& matrix) {
  std::string out = "entity_id";
  for (const auto& spec : matrix.schema().indicators()) out += "," + csv_field(spec.name);
  out += "\n";
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    out += csv_field(entity_ids[i]);
    for (double v : matrix.row(i)) out += fmt::format(",{}", v);
    out += "\n";
  }
  return out;
}

std::string cdf_csv(const CdfEstimate& cdf, std::size_t points) {
  const auto phi = cdf.evaluate_grid(points);
  std::string out = "x,phi\n";
  const double step = 1.0 / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) {
    const double x = k + 1 == points ? 1.0 : static_cast<double>(k) * step;
    out += fmt::format("{},{}\n", x, phi[k]);
  }
  return out;
}

}  // namespace ewm
