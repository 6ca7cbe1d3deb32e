"""Tests for KickStartMyAI."""