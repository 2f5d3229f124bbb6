#include "polidiff/store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polidiff/errors.hpp"

namespace polidiff {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, std::string_view content) {
    if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::IoError, "cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SnapshotRecord* PolicyManifest::find(YearMonth month) {
    for (auto& rec : months)
        if (rec.month == month) return &rec;
    return nullptr;
}

const SnapshotRecord* PolicyManifest::find(YearMonth month) const {
    for (const auto& rec : months)
        if (rec.month == month) return &rec;
    return nullptr;
}

SnapshotStore::SnapshotStore(fs::path root) : root_(std::move(root)) {
    fs::create_directories(root_);
}

std::string SnapshotStore::policy_id_for(const Url& url) {
    std::string slug = url.host;
    for (char c : url.path) slug.push_back(c == '/' ? '-' : c);
    std::string cleaned;
    for (unsigned char c : slug) {
        if (std::isalnum(c) || c == '-' || c == '.')
            cleaned.push_back(static_cast<char>(std::tolower(c)));
        else
            cleaned.push_back('-');
    }
    while (!cleaned.empty() && cleaned.back() == '-') cleaned.pop_back();
    if (cleaned.size() > 60) cleaned.resize(60);
    // short content hash keeps distinct query-string variants apart
    return cleaned + "-" + sha256_hex(url.str()).substr(0, 8);
}

fs::path SnapshotStore::policy_dir(const std::string& policy_id) const {
    return root_ / policy_id;
}

std::vector<std::string> SnapshotStore::policy_ids() const {
    std::vector<std::string> ids;
    if (!fs::exists(root_)) return ids;
    for (const auto& entry : fs::directory_iterator(root_)) {
        if (entry.is_directory() && fs::exists(entry.path() / "manifest.json"))
            ids.push_back(entry.path().filename().string());
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {

ordered_json record_to_json(const SnapshotRecord& rec) {
    ordered_json j;
    j["month"] = rec.month.str();
    j["status"] = snapshot_status_name(rec.status);
    if (!rec.reject_reason.empty()) j["reject_reason"] = rec.reject_reason;
    j["archive_url"] = rec.archive_url;
    j["html_sha256"] = rec.html_sha256;
    if (!rec.text_sha256.empty()) j["text_sha256"] = rec.text_sha256;
    if (rec.tos_flagged) j["tos_flagged"] = true;
    if (!rec.gate_verdict.empty()) {
        j["gate_verdict"] = rec.gate_verdict;
        if (!rec.gate_reason.empty()) j["gate_reason"] = rec.gate_reason;
    }
    return j;
}

SnapshotRecord record_from_json(const ordered_json& j) {
    SnapshotRecord rec;
    auto month = YearMonth::parse(j.at("month").get<std::string>());
    if (!month) throw Error(ErrorKind::SchemaError, "bad month in manifest");
    rec.month = *month;
    auto status = snapshot_status_from_name(j.at("status").get<std::string>());
    if (!status) throw Error(ErrorKind::SchemaError, "bad status in manifest");
    rec.status = *status;
    rec.reject_reason = j.value("reject_reason", "");
    rec.archive_url = j.value("archive_url", "");
    rec.html_sha256 = j.value("html_sha256", "");
    rec.text_sha256 = j.value("text_sha256", "");
    rec.tos_flagged = j.value("tos_flagged", false);
    rec.gate_verdict = j.value("gate_verdict", "");
    rec.gate_reason = j.value("gate_reason", "");
    return rec;
}

}  // namespace

std::optional<PolicyManifest> SnapshotStore::manifest(const std::string& policy_id) const {
    fs::path path = policy_dir(policy_id) / "manifest.json";
    if (!fs::exists(path)) return std::nullopt;
    ordered_json doc = ordered_json::parse(read_file(path));
    PolicyManifest manifest;
    manifest.policy_id = doc.at("policy_id").get<std::string>();
    manifest.url = doc.value("url", "");
    for (const auto& rec : doc.at("months")) manifest.months.push_back(record_from_json(rec));
    std::sort(manifest.months.begin(), manifest.months.end(),
              [](const SnapshotRecord& a, const SnapshotRecord& b) { return a.month < b.month; });
    return manifest;
}

void SnapshotStore::save_manifest(const PolicyManifest& manifest) const {
    ordered_json doc;
    doc["policy_id"] = manifest.policy_id;
    doc["url"] = manifest.url;
    doc["months"] = ordered_json::array();
    for (const auto& rec : manifest.months) doc["months"].push_back(record_to_json(rec));
    write_file_atomic(policy_dir(manifest.policy_id) / "manifest.json", doc.dump(2) + "\n");
}

bool SnapshotStore::has_snapshot(const std::string& policy_id, YearMonth month) const {
    auto m = manifest(policy_id);
    return m && m->find(month) != nullptr;
}

bool SnapshotStore::put_raw(const std::string& policy_id, const std::string& policy_url,
                            YearMonth month, const std::string& archive_url,
                            std::string_view raw_html) {
    PolicyManifest m =
        manifest(policy_id).value_or(PolicyManifest{policy_id, policy_url, {}});
    if (m.url.empty()) m.url = policy_url;
    if (m.find(month)) return false;  // at most one snapshot per (policy, month)

    write_file_atomic(policy_dir(policy_id) / (month.str() + ".html"), raw_html);
    SnapshotRecord rec;
    rec.month = month;
    rec.status = SnapshotStatus::Raw;
    rec.archive_url = archive_url;
    rec.html_sha256 = sha256_hex(raw_html);
    m.months.push_back(rec);
    std::sort(m.months.begin(), m.months.end(),
              [](const SnapshotRecord& a, const SnapshotRecord& b) { return a.month < b.month; });
    save_manifest(m);
    return true;
}

void SnapshotStore::put_extracted(const std::string& policy_id, YearMonth month,
                                  std::string_view text, bool tos_flagged) {
    auto m = manifest(policy_id);
    if (!m) throw Error(ErrorKind::IoError, "no manifest for " + policy_id, policy_id);
    SnapshotRecord* rec = m->find(month);
    if (!rec) throw Error(ErrorKind::IoError, "no snapshot " + month.str(), policy_id);
    write_file_atomic(policy_dir(policy_id) / (month.str() + ".txt"), text);
    rec->status = SnapshotStatus::Extracted;
    rec->reject_reason.clear();
    rec->text_sha256 = sha256_hex(text);
    rec->tos_flagged = tos_flagged;
    save_manifest(*m);
}

void SnapshotStore::mark_rejected(const std::string& policy_id, YearMonth month,
                                  const std::string& reason) {
    auto m = manifest(policy_id);
    if (!m) throw Error(ErrorKind::IoError, "no manifest for " + policy_id, policy_id);
    SnapshotRecord* rec = m->find(month);
    if (!rec) throw Error(ErrorKind::IoError, "no snapshot " + month.str(), policy_id);
    rec->status = SnapshotStatus::Rejected;
    rec->reject_reason = reason;
    save_manifest(*m);
}

void SnapshotStore::record_skipped(const std::string& policy_id,
                                   const std::string& policy_url, YearMonth month,
                                   const std::string& reason) {
    PolicyManifest m =
        manifest(policy_id).value_or(PolicyManifest{policy_id, policy_url, {}});
    if (m.url.empty()) m.url = policy_url;
    if (m.find(month)) return;
    SnapshotRecord rec;
    rec.month = month;
    rec.status = SnapshotStatus::Rejected;
    rec.reject_reason = reason;
    m.months.push_back(rec);
    std::sort(m.months.begin(), m.months.end(),
              [](const SnapshotRecord& a, const SnapshotRecord& b) { return a.month < b.month; });
    save_manifest(m);
}

void SnapshotStore::set_gate_verdict(const std::string& policy_id, YearMonth month,
                                     const std::string& verdict, const std::string& reason) {
    auto m = manifest(policy_id);
    if (!m) throw Error(ErrorKind::IoError, "no manifest for " + policy_id, policy_id);
    SnapshotRecord* rec = m->find(month);
    if (!rec) throw Error(ErrorKind::IoError, "no snapshot " + month.str(), policy_id);
    rec->gate_verdict = verdict;
    rec->gate_reason = reason;
    save_manifest(*m);
}

std::string SnapshotStore::read_html(const std::string& policy_id, YearMonth month) const {
    return read_file(policy_dir(policy_id) / (month.str() + ".html"));
}

std::string SnapshotStore::read_text(const std::string& policy_id, YearMonth month) const {
    return read_file(policy_dir(policy_id) / (month.str() + ".txt"));
}

}  // namespace polidiff
