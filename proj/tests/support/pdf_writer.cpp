#include "pdf_writer.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace testsupport {

namespace {

std::string literal(const std::string& text)
{
    std::string out = "(";
    for (char c : text) {
        if (c == '(' || c == ')' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + ")";
}

std::string escape_xml(const std::string& text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string make_pdf(const PdfSpec& spec)
{
    // 1 catalog, 2 pages, 3 info, 4 metadata, 5.. page objects
    std::vector<std::string> bodies;
    std::string kids;
    for (int i = 0; i < spec.pages; ++i)
        kids += std::to_string(5 + i) + " 0 R ";

    std::string catalog = "<< /Type /Catalog /Pages 2 0 R";
    if (spec.xmp)
        catalog += " /Metadata 4 0 R";
    bodies.push_back(catalog + " >>");
    bodies.push_back("<< /Type /Pages /Kids [" + kids + "] /Count " + std::to_string(spec.pages) + " >>");

    std::string info = "<< /Producer (testsupport)";
    if (spec.title)
        info += " /Title " + literal(*spec.title);
    if (spec.author)
        info += " /Author " + literal(*spec.author);
    if (spec.creation_date)
        info += " /CreationDate " + literal(*spec.creation_date);
    bodies.push_back(info + " >>");

    if (spec.xmp)
        bodies.push_back("<< /Type /Metadata /Subtype /XML /Length " + std::to_string(spec.xmp->size()) + " >>\nstream\n" + *spec.xmp
            + "\nendstream");
    else
        bodies.push_back("null");

    for (int i = 0; i < spec.pages; ++i)
        bodies.push_back("<< /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] >>");

    std::string out = "%PDF-1.4\n%\xE2\xE3\xCF\xD3\n";
    std::vector<std::size_t> offsets;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        offsets.push_back(out.size());
        out += std::to_string(i + 1) + " 0 obj\n" + bodies[i] + "\nendobj\n";
    }
    auto xref_at = out.size();
    out += "xref\n0 " + std::to_string(bodies.size() + 1) + "\n0000000000 65535 f \n";
    char line[32];
    for (auto off : offsets) {
        std::snprintf(line, sizeof line, "%010zu 00000 n \n", off);
        out += line;
    }
    out += "trailer\n<< /Size " + std::to_string(bodies.size() + 1) + " /Root 1 0 R /Info 3 0 R >>\nstartxref\n"
        + std::to_string(xref_at) + "\n%%EOF\n";
    return out;
}

std::string make_xmp(const std::optional<std::string>& title, const std::vector<std::string>& creators,
    const std::optional<std::string>& create_date)
{
    std::ostringstream x;
    x << "<?xpacket begin=\"\xEF\xBB\xBF\" id=\"W5M0MpCehiHzreSzNTczkc9d\"?>\n"
      << "<x:xmpmeta xmlns:x=\"adobe:ns:meta/\"><rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">\n"
      << "<rdf:Description rdf:about=\"\" xmlns:dc=\"http://purl.org/dc/elements/1.1/\" xmlns:xmp=\"http://ns.adobe.com/xap/1.0/\">\n";
    if (title)
        x << "<dc:title><rdf:Alt><rdf:li xml:lang=\"x-default\">" << escape_xml(*title) << "</rdf:li></rdf:Alt></dc:title>\n";
    if (!creators.empty()) {
        x << "<dc:creator><rdf:Seq>";
        for (auto& c : creators)
            x << "<rdf:li>" << escape_xml(c) << "</rdf:li>";
        x << "</rdf:Seq></dc:creator>\n";
    }
    if (create_date)
        x << "<xmp:CreateDate>" << *create_date << "</xmp:CreateDate>\n";
    x << "</rdf:Description></rdf:RDF></x:xmpmeta>\n<?xpacket end=\"w\"?>";
    return x.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes)
{
    std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

TempDir::TempDir(const std::string& tag)
{
    static std::atomic<unsigned> counter { 0 };
    std::random_device rd;
    auto base = std::filesystem::temp_directory_path();
    for (;;) {
        auto candidate = base / ("pdfharvest-" + tag + "-" + std::to_string(rd()) + "-" + std::to_string(counter++));
        if (std::filesystem::create_directory(candidate)) {
            path_ = candidate;
            return;
        }
    }
}

TempDir::~TempDir()
{
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

} // namespace testsupport
