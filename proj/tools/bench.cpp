#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "jk/genmat.hpp"
#include "jk/structure.hpp"
#include "jk/text_io.hpp"
#include "report.hpp"
#include "verbs.hpp"

namespace jktool {

namespace {

constexpr const char* kHeader = "family,d,n,variant,preprocess,f1A,annihpol,krylovgs,preprocessing,jkelim,total";

struct Row {
  std::string family;
  std::size_t d = 0;
  std::size_t n = 0;
  jk::Method method{};
  bool preprocess = false;
  std::optional<jk::PhaseTimings> t;  // empty when the run failed
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

std::vector<jk::Method> parse_variants(const std::string& value) {
  if (value == "all" || value == "ALL") {
    return {jk::Method::kFullElimination, jk::Method::kEarlyTermination, jk::Method::kEarlyTerminationMatrix};
  }
  std::vector<jk::Method> out;
  for (const auto& tok : CLI::detail::split(value, ',')) {
    const auto m = jk::parse_method(tok);
    if (!m) throw UsageError("unknown variant '" + tok + "'");
    out.push_back(*m);
  }
  return out;
}

// One timed run of all factors, serialized. Phases are summed over factors.
jk::PhaseTimings timed_run(const jk::RatMatrix& a, const jk::StructureSpec& spec, jk::MethodVariant v) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reps = jk::jordan_blocks_all(a, spec.charpoly(), v, false);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  jk::PhaseTimings sum;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!(reps[i].structure == spec.factors[i].counts)) {
      throw std::runtime_error("factor " + std::to_string(i + 1) + " gave " + jk::to_string(reps[i].structure));
    }
    const auto& t = reps[i].timings;
    sum.f1a += t.f1a;
    sum.annihpol += t.annihpol;
    sum.krylovgs += t.krylovgs;
    if (t.preprocessing) sum.preprocessing = sum.preprocessing.value_or(0) + *t.preprocessing;
    sum.jkelim += t.jkelim;
  }
  sum.total = total;
  return sum;
}

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string csv_line(const Row& r) {
  std::ostringstream out;
  out << r.family << ',' << r.d << ',' << r.n << ',' << jk::to_string(r.method) << ','
      << (r.preprocess ? "on" : "off") << ',';
  if (!r.t) {
    out << "NA,NA,NA,NA,NA,NA";
  } else {
    const auto& t = *r.t;
    out << fixed6(t.f1a) << ',' << fixed6(t.annihpol) << ',' << fixed6(t.krylovgs) << ','
        << (t.preprocessing ? fixed6(*t.preprocessing) : std::string("NA")) << ',' << fixed6(t.jkelim) << ','
        << fixed6(t.total);
  }
  return out.str();
}

void print_tables(const std::vector<Row>& rows, std::ostream& out) {
  std::map<std::pair<int, bool>, std::vector<const Row*>> groups;
  for (const auto& r : rows) groups[{static_cast<int>(r.method), r.preprocess}].push_back(&r);
  for (const auto& [key, group] : groups) {
    const Row& first = *group.front();
    out << '\n' << first.family << ", variant " << jk::to_string(first.method) << ", preprocessing "
        << (first.preprocess ? "on" : "off") << '\n';
    char line[160];
    std::snprintf(line, sizeof line, "%8s %10s %10s %10s %14s %10s %10s\n", "Size(A)", "f1(A)", "AnnihPol",
                  "KrylovGS", "Preprocessing", "JKElim", "Total");
    out << line;
    for (const Row* r : group) {
      if (!r->t) {
        std::snprintf(line, sizeof line, "%8zu %10s %10s %10s %14s %10s %10s\n", r->n, "NA", "NA", "NA", "NA", "NA",
                      "NA");
      } else {
        const auto& t = *r->t;
        std::snprintf(line, sizeof line, "%8zu %10s %10s %10s %14s %10s %10s\n", r->n, seconds_cell(t.f1a).c_str(),
                      seconds_cell(t.annihpol).c_str(), seconds_cell(t.krylovgs).c_str(),
                      t.preprocessing ? seconds_cell(*t.preprocessing).c_str() : "---",
                      seconds_cell(t.jkelim).c_str(), seconds_cell(t.total).c_str());
      }
      out << line;
    }
  }
}

}  // namespace

int run_bench(const BenchArgs& args) {
  const auto methods = parse_variants(args.variants);
  const auto flags = preprocess_flags(args.preprocess);
  std::vector<Row> rows;
  for (std::size_t d : args.degrees) {
    const auto spec = jk::named_family(args.family, d);
    const jk::RatMatrix a = jk::generate(spec, args.seed);
    for (jk::Method m : methods) {
      for (bool pre : flags) {
        Row row{args.family, d, a.rows(), m, pre, std::nullopt};
        try {
          std::vector<jk::PhaseTimings> runs;
          for (std::size_t k = 0; k < args.repeat; ++k) runs.push_back(timed_run(a, spec, {m, pre}));
          auto col = [&](auto get) {
            std::vector<double> v;
            for (const auto& t : runs) v.push_back(get(t));
            return median(v);
          };
          jk::PhaseTimings t;
          t.f1a = col([](const jk::PhaseTimings& x) { return x.f1a; });
          t.annihpol = col([](const jk::PhaseTimings& x) { return x.annihpol; });
          t.krylovgs = col([](const jk::PhaseTimings& x) { return x.krylovgs; });
          if (pre) t.preprocessing = col([](const jk::PhaseTimings& x) { return x.preprocessing.value_or(0); });
          t.jkelim = col([](const jk::PhaseTimings& x) { return x.jkelim; });
          t.total = col([](const jk::PhaseTimings& x) { return x.total; });
          row.t = t;
        } catch (const std::exception& e) {
          std::cerr << args.family << " d=" << d << ' ' << jk::to_string(m) << ": " << e.what() << '\n';
        }
        rows.push_back(row);
        std::cerr << csv_line(row) << '\n';
      }
    }
  }

  std::string csv = std::string(kHeader) + '\n';
  for (const auto& r : rows) csv += csv_line(r) + '\n';
  if (args.out.empty()) std::cout << csv;
  else jk::write_file(args.out, csv);
  if (args.table) print_tables(rows, std::cout);
  return kOk;
}

}  // namespace jktool
