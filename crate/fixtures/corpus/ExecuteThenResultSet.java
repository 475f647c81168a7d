import java.sql.*;

class ExecuteThenResultSet {
    void run(Connection c) throws SQLException {
        Statement st = c.createStatement();
        st.execute("SELECT id, note FROM orders");
        ResultSet rs = st.getResultSet();
        if (rs.next()) {
            String s = rs.getString(3);
        }
    }
}
