"""
Test package for the homcoalg engine.

Test structure:
- test_tensorcore.py: fields, tensor maps, leg permutations and composition
- test_structures.py: structure packages, the axiom checker and duality
- test_constructions.py: twists, derived coalgebras and the rule registry
- test_comodules.py: comodule packages, their checker and constructions
- test_file_format.py: parsing and canonical emission of .hcs files
- test_search.py: witness search, minimization and the Sweedler oracle
- test_campaign.py, test_reports.py: theorem campaigns, reports and the ledger
- test_cli.py: the command line and its exit codes
- conftest.py: Pytest fixtures and configuration

Run tests with:
    pytest test/
    pytest test/ -m "not integration"
"""
