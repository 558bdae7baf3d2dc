SCHEMA_TAG = "supersat-report/1"

# Fixed CSV projection of CampaignRecord; `values` and `margins` are JSON-encoded cells.
CSV_COLUMNS = (
    "campaign",
    "index",
    "instance",
    "status",
    "passed",
    "margin",
    "vacuous",
    "note",
    "values",
)
