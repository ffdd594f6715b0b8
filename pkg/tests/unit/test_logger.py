"""Unit tests for the per-service log files."""

import logging

import pytest

from core.models.config import LogLevel, RunConfig
from core.utils.logger import attach_service_logs, configure_service_logs, detach_service_logs


class TestServiceLogs:
    """Test cases for attaching and replacing service file handlers."""

    def setup_method(self):
        self.logger = logging.getLogger("core.services.corpus_service")

    def teardown_method(self):
        detach_service_logs()

    def _file_handlers(self):
        return [h for h in self.logger.handlers if isinstance(h, logging.FileHandler)]

    def test_records_reach_service_file(self, tmp_path):
        paths = attach_service_logs({"core.services.corpus_service": "corpus.log"}, tmp_path, "WARNING")
        assert paths == [tmp_path / "corpus.log"]
        self.logger.warning("slice order 7 built")
        self.logger.info("below the file level")
        for handler in self._file_handlers():
            handler.flush()
        text = (tmp_path / "corpus.log").read_text(encoding="utf-8")
        assert "core.services.corpus_service - WARNING - slice order 7 built" in text
        assert "below the file level" not in text

    def test_second_call_replaces_handlers(self, tmp_path):
        attach_service_logs({"core.services.corpus_service": "first.log"}, tmp_path)
        attach_service_logs({"core.services.corpus_service": "second.log"}, tmp_path)
        handlers = self._file_handlers()
        assert len(handlers) == 1
        assert handlers[0].baseFilename.endswith("second.log")

    def test_detach_removes_handlers(self, tmp_path):
        attach_service_logs({"core.services.corpus_service": "corpus.log"}, tmp_path)
        detach_service_logs()
        assert self._file_handlers() == []

    def test_config_drives_directory_and_names(self, tmp_path):
        config = RunConfig(output_dir=str(tmp_path), log_level=LogLevel.DEBUG)
        paths = configure_service_logs(config)
        assert [p.name for p in paths] == ["corpus.log", "reports.log", "verify.log"]
        assert all(p.parent == tmp_path / "logs" for p in paths)
        assert self._file_handlers()[0].level == logging.DEBUG

    def test_explicit_log_dir_and_empty_map(self, tmp_path):
        config = RunConfig(output_dir=str(tmp_path), log_dir=str(tmp_path / "elsewhere"), log_files={})
        assert configure_service_logs(config) == []
        assert self._file_handlers() == []


if __name__ == "__main__":
    pytest.main([__file__])
