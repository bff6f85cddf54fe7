#include <charconv>
#include <fmt/format.h>
#include <stdexcept>

#include "optosteer/sweep.hpp"

namespace optosteer {

std::string_view to_string(Column column) {
  switch (column) {
    case Column::swept: return "swept";
    case Column::g_ab: return "g_ab";
    case Column::g_ba: return "g_ba";
    case Column::e_n: return "e_n";
    case Column::nu: return "nu";
    case Column::regime: return "regime";
  }
  return "?";
}

const std::vector<Column>& default_columns() {
  static const std::vector<Column> columns{Column::swept, Column::g_ab, Column::g_ba,
                                           Column::e_n,   Column::nu,   Column::regime};
  return columns;
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 12);
  if (res.ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  std::string s(buf, res.ptr);

  // to_chars writes e+00 / e-05; strip the plus sign and exponent padding.
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mantissa = s.substr(0, e);
  std::string_view exp(s.data() + e + 1, s.size() - e - 1);
  bool negative = false;
  if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
    negative = exp.front() == '-';
    exp.remove_prefix(1);
  }
  while (exp.size() > 1 && exp.front() == '0') exp.remove_prefix(1);
  return mantissa + "e" + (negative ? "-" : "") + std::string(exp);
}

std::string write_csv(const std::vector<SweepRecord>& records, const std::vector<Column>& columns) {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += to_string(columns[c]);
  }
  out += '\n';
  for (const auto& rec : records) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      switch (columns[c]) {
        case Column::swept: out += format_number(rec.value); break;
        case Column::g_ab: out += format_number(rec.g_ab); break;
        case Column::g_ba: out += format_number(rec.g_ba); break;
        case Column::e_n: out += format_number(rec.e_n); break;
        case Column::nu: out += format_number(rec.nu); break;
        case Column::regime: out += rec.regime_label(); break;
      }
    }
    out += '\n';
  }
  return out;
}

std::string plot_script(std::string_view csv_path, SweepParam swept) {
  return fmt::format(
      "# gnuplot script; run: gnuplot -persist <this file>\n"
      "set datafile separator ','\n"
      "set xlabel '{1}'\n"
      "set ylabel 'quantum correlations'\n"
      "set key top left\n"
      "set grid\n"
      "plot '{0}' using 1:2 skip 1 with lines dashtype 2 lw 2 title 'G(A->B)', \\\n"
      "     '{0}' using 1:3 skip 1 with lines lw 2 title 'G(B->A)', \\\n"
      "     '{0}' using 1:4 skip 1 with lines dashtype 4 lw 2 title 'E_N'\n",
      csv_path, to_string(swept));
}

}  // namespace optosteer
