# keep a bare `pytest` from collecting the reference corpus
collect_ignore = ["examples"]
