#include <pdfharvest/corpus.hpp>
#include <pdfharvest/docinfo.hpp>
#include <pdfharvest/document.hpp>
#include <pdfharvest/exporters.hpp>
#include <pdfharvest/xmp.hpp>

#include <benchmark/benchmark.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pdfharvest;
namespace fs = std::filesystem;

namespace {

const fs::path fixtures = PDFHARVEST_FIXTURE_DIR;

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Copies of the oracle fixtures, repeated to reach `copies` files.
class Corpus {
public:
    explicit Corpus(int copies)
        : dir_(fs::temp_directory_path() / ("pdfharvest_bench_" + std::to_string(copies)))
    {
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        std::vector<fs::path> sources;
        for (auto& e : fs::directory_iterator(fixtures / "oracle"))
            sources.push_back(e.path());
        std::sort(sources.begin(), sources.end());
        for (int i = 0; i < copies; ++i)
            fs::copy_file(sources[i % sources.size()], dir_ / (std::to_string(i) + ".pdf"));
    }
    ~Corpus() { fs::remove_all(dir_); }
    const fs::path& path() const { return dir_; }

private:
    fs::path dir_;
};

void BM_LoadDocument(benchmark::State& state)
{
    auto bytes = slurp(fixtures / "oracle/o06_objstm.pdf");
    for (auto _ : state)
        benchmark::DoNotOptimize(load_document_from_bytes(bytes));
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(bytes.size()));
}
BENCHMARK(BM_LoadDocument);

void BM_ReconstructCorrupt(benchmark::State& state)
{
    auto bytes = slurp(fixtures / "corrupt/o02_info_only_blank_xref.pdf");
    for (auto _ : state)
        benchmark::DoNotOptimize(load_document_from_bytes(bytes));
}
BENCHMARK(BM_ReconstructCorrupt);

void BM_ExtractMetadata(benchmark::State& state)
{
    auto doc = load_document(fixtures / "oracle/o05_both_differ.pdf");
    for (auto _ : state) {
        auto info = extract_docinfo(doc);
        auto packet = parse_xmp(locate_xmp(doc).value_or(""));
        benchmark::DoNotOptimize(merge(to_dublin_core(packet), packet, info));
    }
}
BENCHMARK(BM_ExtractMetadata);

void BM_Scan(benchmark::State& state)
{
    Corpus corpus(static_cast<int>(state.range(0)));
    ScanOptions options;
    options.workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(scan(corpus.path(), ReferenceDate::of_year(2012), options));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Scan)->Args({ 200, 1 })->Args({ 200, 4 })->Args({ 1000, 4 })->Unit(benchmark::kMillisecond);

void BM_Exporters(benchmark::State& state)
{
    Corpus corpus(200);
    auto stats = scan(corpus.path(), ReferenceDate::of_year(2012));
    for (auto _ : state) {
        benchmark::DoNotOptimize(render_table(stats.records));
        benchmark::DoNotOptimize(export_csv(stats.records));
        benchmark::DoNotOptimize(export_json(stats));
        benchmark::DoNotOptimize(export_ris(stats.records));
        benchmark::DoNotOptimize(export_bibtex(stats.records));
    }
}
BENCHMARK(BM_Exporters)->Unit(benchmark::kMicrosecond);

} // namespace
BENCHMARK_MAIN();
