#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polidiff/corpus.hpp"
#include "polidiff/url.hpp"
#include "polidiff/util.hpp"

namespace polidiff {

struct SnapshotRecord {
    YearMonth month{};
    SnapshotStatus status = SnapshotStatus::Raw;
    std::string reject_reason;
    std::string archive_url;
    std::string html_sha256;
    std::string text_sha256;
    bool tos_flagged = false;
    // set by the gate stage
    std::string gate_verdict;  // "", "valid", "invalid"
    std::string gate_reason;
};

struct PolicyManifest {
    std::string policy_id;
    std::string url;
    std::vector<SnapshotRecord> months;  // ascending by month

    SnapshotRecord* find(YearMonth month);
    const SnapshotRecord* find(YearMonth month) const;
};

// Filesystem layout: <root>/<policy_id>/<YYYY-MM>.html + .txt + manifest.json.
// Single writer, any number of readers; writes go through a temp file and a
// rename. Re-running a fetch over the same range performs no duplicate
// writes (keyed by policy id + month).
class SnapshotStore {
public:
    explicit SnapshotStore(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }

    static std::string policy_id_for(const Url& url);

    std::vector<std::string> policy_ids() const;
    std::optional<PolicyManifest> manifest(const std::string& policy_id) const;

    bool has_snapshot(const std::string& policy_id, YearMonth month) const;

    // Stores raw HTML; returns false (and writes nothing) when the month
    // already exists.
    bool put_raw(const std::string& policy_id, const std::string& policy_url,
                 YearMonth month, const std::string& archive_url,
                 std::string_view raw_html);

    void put_extracted(const std::string& policy_id, YearMonth month,
                       std::string_view text, bool tos_flagged);
    void mark_rejected(const std::string& policy_id, YearMonth month,
                       const std::string& reason);
    // records a month that was never downloaded (e.g. robots-refused capture)
    void record_skipped(const std::string& policy_id, const std::string& policy_url,
                        YearMonth month, const std::string& reason);
    void set_gate_verdict(const std::string& policy_id, YearMonth month,
                          const std::string& verdict, const std::string& reason);

    std::string read_html(const std::string& policy_id, YearMonth month) const;
    std::string read_text(const std::string& policy_id, YearMonth month) const;

private:
    std::filesystem::path policy_dir(const std::string& policy_id) const;
    void save_manifest(const PolicyManifest& manifest) const;

    std::filesystem::path root_;
};

// atomic-ish file write: temp file + rename
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace polidiff
