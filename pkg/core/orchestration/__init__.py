"""Orchestration layer for coordinating workflows and services."""