#!/usr/bin/env python3
"""
Tests for version information

Copyright (C) 2025 Sergei Sveshnikov

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, see <https://www.gnu.org/licenses/>.
"""

import unittest

from thetaspin.version import (
    AUTHOR,
    CLI_DESCRIPTION,
    LICENSE,
    PROJECT_NAME,
    TABLE_DESCRIPTION,
    VERSION,
    get_version_for_argparse,
)


class TestVersionInfo(unittest.TestCase):
    """Version information tests"""

    def test_version_format(self):
        """Version is in X.Y.Z format"""
        self.assertRegex(VERSION, r"^\d+\.\d+\.\d+$", f"Version {VERSION} should be in X.Y.Z format")

    def test_metadata_not_empty(self):
        """Author, license and project name are set"""
        self.assertGreater(len(AUTHOR.strip()), 0)
        self.assertEqual(LICENSE, "GPL-3.0")
        self.assertEqual(PROJECT_NAME, "thetaspin")

    def test_argparse_version_format(self):
        """Version flag renders a single line with metadata."""
        version_str = get_version_for_argparse("thetaspin")

        self.assertNotIn("\n", version_str)
        self.assertTrue(version_str.startswith(f"{PROJECT_NAME} {VERSION} |"))
        self.assertIn(AUTHOR, version_str)
        self.assertIn(LICENSE, version_str)
        self.assertIn(CLI_DESCRIPTION, version_str)

    def test_other_tool_uses_table_description(self):
        """Any other tool name gets the table description."""
        version_str = get_version_for_argparse("tables")
        self.assertIn(TABLE_DESCRIPTION, version_str)
        self.assertNotIn(CLI_DESCRIPTION, version_str)


if __name__ == "__main__":
    unittest.main()
